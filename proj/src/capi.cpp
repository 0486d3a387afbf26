#include <memory>
#include <sstream>
#include <string>

#include <algorithm>

#include "partpat/bijections.hpp"
#include "partpat/containment.hpp"
#include "partpat/enumeration.hpp"
#include "partpat/error.hpp"
#include "partpat/fillings.hpp"
#include "partpat/partpat.h"

using namespace partpat;

struct pp_context {
  CountOptions opt;
  std::unique_ptr<CountCache> cache;
  std::string error;
};

struct pp_text {
  std::string s;
};

namespace {

struct ArgumentError : Error {
  using Error::Error;
};

template <class F>
pp_status guard(pp_context* ctx, F&& body) {
  if (!ctx) return PP_ERR_ARGUMENT;
  ctx->error.clear();
  auto fail = [&](pp_status s, const char* what) {
    ctx->error = what;
    return s;
  };
  try {
    return body();
  } catch (const ParseError& e) {
    return fail(PP_ERR_PARSE, e.what());
  } catch (const OverflowError& e) {
    return fail(PP_ERR_OVERFLOW, e.what());
  } catch (const PreconditionError& e) {
    return fail(PP_ERR_PRECONDITION, e.what());
  } catch (const InvariantError& e) {
    return fail(PP_ERR_INVARIANT, e.what());
  } catch (const ArgumentError& e) {
    return fail(PP_ERR_ARGUMENT, e.what());
  } catch (const Error& e) {
    return fail(PP_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(PP_ERR_INTERNAL, e.what());
  }
}

void need(bool ok, const char* what) {
  if (!ok) throw ArgumentError(what);
}

pp_text* text(std::string s) { return new pp_text{std::move(s)}; }

void flush(pp_context* ctx) {
  if (ctx->cache) ctx->cache->save();
}

Matrix01 avoid_matrix(const char* s, int k) {
  SymbolSeq seq = SymbolSeq::parse(s);
  if (k <= 0) k = seq.max();
  return matrix_of(seq, k);
}

Shape shape_of(pp_shape_kind kind, const char* s) {
  return Shape::parse(kind == PP_STACK ? ShapeKind::Stack : ShapeKind::Ferrers, s);
}

// filling cells: digits, or comma-separated rows; 0 marks an empty column
std::vector<std::uint8_t> parse_cells(const std::string& s) {
  std::vector<std::uint8_t> out;
  auto bad = [&] { return ParseError("bad filling cells '" + s + "'"); };
  if (s.find(',') == std::string::npos) {
    for (char c : s) {
      if (c < '0' || c > '9') throw bad();
      out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
  }
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, ',');) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 3) throw bad();
    int v = std::stoi(part);
    if (v > 255) throw bad();
    out.push_back(static_cast<std::uint8_t>(v));
  }
  return out;
}

std::string cells_str(const Filling& f) {
  std::string out;
  for (std::size_t i = 0; i < f.cell.size(); ++i) out += (i ? "," : "") + std::to_string(f.cell[i]);
  return out;
}

struct Report {
  std::ostringstream o;
  void line(const std::string& k, const std::string& v) { o << k << ": " << v << '\n'; }
  void check(const std::string& what) { o << "check: " << what << '\n'; }
};

std::vector<std::size_t> block_sizes(const Partition& p) {
  std::vector<std::size_t> v;
  for (const auto& b : blocks_of(p)) v.push_back(b.size());
  std::sort(v.begin(), v.end());
  return v;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvariantError("verification failed: " + what);
}

std::string bijection(const std::string& name, const std::string& input, const pp_bijection_params& x, bool inv) {
  Report r;
  r.line("map", name);
  r.line("direction", inv ? "inverse" : "forward");
  r.line("input", input);
  if (name == "thm12") {
    Partition p = Partition::parse(input);
    SymbolSeq src = ones_two_ones(x.k, x.m - x.k), tgt = ones_two_ones(x.m, 0);
    if (inv) std::swap(src, tgt);
    Partition out = inv ? thm12_inverse(p, x.k, x.m) : thm12_map(p, x.k, x.m);
    Partition back = inv ? thm12_map(out, x.k, x.m) : thm12_inverse(out, x.k, x.m);
    require(back == p, "round trip");
    require(!contains(out.seq(), tgt), "output avoids target");
    require(block_sizes(out) == block_sizes(p), "block sizes");
    r.line("params", "k=" + std::to_string(x.k) + " m=" + std::to_string(x.m));
    r.line("output", out.str());
    r.check("input avoids " + src.str());
    r.check("output avoids " + tgt.str());
    r.check("inverse map returns the input");
    r.check("multiset of block sizes preserved");
  } else if (name == "fall") {
    need(x.shape != nullptr, "fall needs a stack shape");
    Filling f(Shape::parse(ShapeKind::Stack, x.shape), parse_cells(input));
    Filling out = inv ? fall_inverse(f, x.p, x.q) : fall_bijection(f, x.p, x.q);
    Filling back = inv ? fall_bijection(out, x.p, x.q) : fall_inverse(out, x.p, x.q);
    require(back == f, "round trip");
    for (int row = 1; row <= f.shape.rows(); ++row) require(out.ones_in_row(row) == f.ones_in_row(row), "row counts");
    SymbolSeq src = repeat(2, x.p) + SymbolSeq{1} + repeat(2, x.q), tgt = repeat(2, x.p + x.q) + SymbolSeq{1};
    if (inv) std::swap(src, tgt);
    r.line("params", "p=" + std::to_string(x.p) + " q=" + std::to_string(x.q) + " shape=" + f.shape.str());
    r.line("output", cells_str(out));
    r.check("input avoids M(" + src.str() + ",2)");
    r.check("output avoids M(" + tgt.str() + ",2)");
    r.check("inverse map returns the input");
    r.check("1-cells per row preserved");
  } else if (name == "sigma" || name == "l124") {
    Partition p = Partition::parse(input);
    static const HybridMap lemmas[] = {HybridMap::Lemma124a, HybridMap::Lemma124b, HybridMap::Lemma134a,
                                       HybridMap::Lemma134b};
    HybridMap map;
    HybridParams hp{x.p, x.q, x.r};
    if (name == "sigma") {
      map = x.plus ? HybridMap::SigmaPlus : HybridMap::SigmaMinus;
    } else {
      if (x.lemma < 1 || x.lemma > 4) throw PreconditionError("lemma must be 1..4");
      map = lemmas[x.lemma - 1];
      hp.r = 0;
    }
    SymbolSeq src = hybrid_source(map, hp), tgt = hybrid_target(map, hp);
    if (inv) std::swap(src, tgt);
    Partition out = hybrid_chain(p, map, hp, inv);
    require(hybrid_chain(out, map, hp, !inv) == p, "round trip");
    require(!contains(out.seq(), tgt), "output avoids target");
    r.line("params", "p=" + std::to_string(hp.p) + " q=" + std::to_string(hp.q) + " r=" + std::to_string(hp.r));
    r.line("output", out.str());
    r.check("input avoids " + src.str());
    r.check("output avoids " + tgt.str());
    r.check("every level word valid and compatible");
    r.check("inverse map returns the input");
  } else if (name == "tail") {
    SymbolSeq s = SymbolSeq::parse(input);
    SymbolSeq out;
    if (!inv) {
      out = tail_reduce(s);
      require(tail_extend(out, s.back()) == s, "round trip");
      r.line("output", out.str());
      r.check("input is 123-avoiding of rank " + std::to_string(tail_rank(s)) + ", last symbol " +
              std::to_string(s.back()));
      r.check("output is 123-avoiding of rank " + std::to_string(tail_rank(out)));
    } else {
      out = tail_extend(s, x.k);
      require(tail_reduce(out) == s, "round trip");
      r.line("output", out.str());
      r.check("output is 123-avoiding of rank " + std::to_string(tail_rank(out)) + ", last symbol " +
              std::to_string(x.k));
    }
    r.check("inverse map returns the input");
  } else if (name == "phi") {
    SymbolSeq s = SymbolSeq::parse(input);
    int m = x.m > 0 ? x.m : s.max();
    auto kpq = as_kpq(s, m, x.k);
    if (!kpq) throw PreconditionError("input is not a (k,p,q)-matrix for k=" + std::to_string(x.k));
    KpqMatrix out = inv ? phi_inverse(*kpq) : phi(*kpq);
    auto back = inv ? phi(out) : phi_inverse(out);
    require(back.seq == s, "round trip");
    auto check = as_kpq(out.seq, m, x.k);
    require(check && check->p == out.p && check->q == out.q, "output shape");
    r.line("params", "m=" + std::to_string(m) + " k=" + std::to_string(x.k));
    r.line("output", out.seq.str());
    r.check("input is a 12112-avoiding (" + std::to_string(x.k) + "," + std::to_string(kpq->p) + "," +
            std::to_string(kpq->q) + ")-matrix");
    r.check("output is a 12112-avoiding (" + std::to_string(x.k) + "," + std::to_string(out.p) + "," +
            std::to_string(out.q) + ")-matrix");
    r.check("inverse map returns the input");
  } else if (name == "p12112") {
    Partition p = Partition::parse(input);
    Partition out = inv ? bijection_12212_12112(p) : bijection_12112_12212(p);
    require((inv ? bijection_12112_12212(out) : bijection_12212_12112(out)) == p, "round trip");
    require(out.size() == p.size() && out.blocks() == p.blocks(), "length and blocks");
    r.line("output", out.str());
    r.check(std::string("input avoids ") + (inv ? "12212" : "12112"));
    r.check(std::string("output avoids ") + (inv ? "12112" : "12212"));
    r.check("length and number of blocks preserved");
    r.check("inverse map returns the input");
  } else {
    throw ArgumentError("unknown bijection '" + name + "'");
  }
  return r.o.str();
}

}  // namespace

extern "C" {

const char* pp_version(void) { return "1.0.0"; }

const char* pp_status_name(pp_status s) {
  switch (s) {
    case PP_OK:
      return "ok";
    case PP_NOT_FOUND:
      return "not found";
    case PP_ERR_PARSE:
      return "parse error";
    case PP_ERR_OVERFLOW:
      return "overflow";
    case PP_ERR_PRECONDITION:
      return "precondition violated";
    case PP_ERR_INVARIANT:
      return "invariant violated";
    case PP_ERR_IO:
      return "i/o error";
    case PP_ERR_ARGUMENT:
      return "bad argument";
    case PP_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

pp_status pp_context_new(pp_context** out) {
  if (!out) return PP_ERR_ARGUMENT;
  try {
    *out = new pp_context();
  } catch (...) {
    return PP_ERR_INTERNAL;
  }
  return PP_OK;
}

void pp_context_free(pp_context* ctx) { delete ctx; }

pp_status pp_context_set_threads(pp_context* ctx, unsigned threads) {
  return guard(ctx, [&] {
    ctx->opt.threads = threads;
    return PP_OK;
  });
}

pp_status pp_context_set_cache(pp_context* ctx, const char* path) {
  return guard(ctx, [&] {
    if (!path) {
      ctx->cache.reset();
      return PP_OK;
    }
    std::string p = *path ? path : CountCache::default_path();
    ctx->cache = std::make_unique<CountCache>(p);
    return PP_OK;
  });
}

const char* pp_last_error(const pp_context* ctx) { return ctx ? ctx->error.c_str() : ""; }

const char* pp_text_data(const pp_text* t) { return t ? t->s.c_str() : ""; }
size_t pp_text_size(const pp_text* t) { return t ? t->s.size() : 0; }
void pp_text_free(pp_text* t) { delete t; }

pp_status pp_count(pp_context* ctx, const char* pattern, int n, uint64_t* out) {
  return guard(ctx, [&] {
    need(pattern && out, "null argument");
    auto t = build_count_table(Partition::parse(pattern), n, n, false, ctx->opt, ctx->cache.get());
    flush(ctx);
    *out = t.entries.at(n);
    return PP_OK;
  });
}

pp_status pp_count_table(pp_context* ctx, const char* pattern, int n_lo, int n_hi, int by_blocks, pp_format fmt,
                         pp_text** out) {
  return guard(ctx, [&] {
    need(pattern && out, "null argument");
    auto t = build_count_table(Partition::parse(pattern), n_lo, n_hi, by_blocks != 0, ctx->opt, ctx->cache.get());
    flush(ctx);
    *out = text(fmt == PP_JSON ? to_json(t) : to_csv(t));
    return PP_OK;
  });
}

pp_status pp_classify(pp_context* ctx, int size, int horizon, int full_vectors, pp_format fmt, pp_text** out,
                      size_t* class_count) {
  return guard(ctx, [&] {
    need(out != nullptr, "null argument");
    auto r = classify(size, horizon, ctx->opt, full_vectors != 0, ctx->cache.get());
    flush(ctx);
    if (class_count) *class_count = r.classes.size();
    *out = text(fmt == PP_JSON ? to_json(r) : to_csv(r));
    return PP_OK;
  });
}

pp_status pp_witness(pp_context* ctx, const char* p1, const char* p2, int max_n, int* out_n) {
  return guard(ctx, [&] {
    need(p1 && p2 && out_n, "null argument");
    auto w = witness(Partition::parse(p1), Partition::parse(p2), max_n, ctx->opt);
    if (!w) return PP_NOT_FOUND;
    *out_n = *w;
    return PP_OK;
  });
}

pp_status pp_fillings_count(pp_context* ctx, pp_shape_kind kind, const char* shape, const char* avoid, int k,
                            pp_fill_mode mode, uint64_t* out) {
  return guard(ctx, [&] {
    need(shape && avoid && out, "null argument");
    *out = count_fillings(shape_of(kind, shape), avoid_matrix(avoid, k),
                          mode == PP_SPARSE ? FillMode::Sparse : FillMode::SemiStandard);
    return PP_OK;
  });
}

pp_status pp_fillings_equiv(pp_context* ctx, pp_shape_kind kind, const char* a, const char* b, int k, int max_columns,
                            int max_rows, int refine_rows, pp_text** report) {
  return guard(ctx, [&] {
    need(a && b && report, "null argument");
    SymbolSeq sa = SymbolSeq::parse(a), sb = SymbolSeq::parse(b);
    int kk = k > 0 ? k : std::max(sa.max(), sb.max());
    Matrix01 ma = matrix_of(sa, kk), mb = matrix_of(sb, kk);
    auto r = kind == PP_STACK ? stack_equiv_upto(ma, mb, max_columns, max_rows, refine_rows != 0)
                              : ferrers_equiv_upto(ma, mb, max_columns, max_rows, refine_rows != 0);
    std::ostringstream o;
    o << "M(" << sa.str() << "," << kk << ") vs M(" << sb.str() << "," << kk << "), "
      << (kind == PP_STACK ? "stack" : "Ferrers") << " shapes up to " << max_columns << " columns and " << max_rows
      << " rows" << (refine_rows ? ", refined by row sums" : "") << '\n';
    if (r.equivalent) {
      o << "equal counts on every shape (not a proof of equivalence)\n";
    } else {
      o << "separated by shape " << r.witness->str() << ": " << r.left << " vs " << r.right << '\n';
    }
    *report = text(o.str());
    return r.equivalent ? PP_OK : PP_NOT_FOUND;
  });
}

pp_status pp_bijection(pp_context* ctx, const char* name, const char* input, const pp_bijection_params* prm,
                       int inverse, pp_text** report) {
  return guard(ctx, [&] {
    need(name && input && report, "null argument");
    pp_bijection_params x{};
    if (prm) x = *prm;
    *report = text(bijection(name, input, x, inverse != 0));
    return PP_OK;
  });
}

}  // extern "C"
