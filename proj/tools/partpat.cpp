// partpat command line front end; talks to the library only through partpat.h
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "partpat/partpat.h"

namespace {

int exit_code(pp_status s) {
  switch (s) {
    case PP_OK:
      return 0;
    case PP_NOT_FOUND:
      return 1;
    case PP_ERR_PARSE:
    case PP_ERR_PRECONDITION:
    case PP_ERR_ARGUMENT:
      return 2;
    case PP_ERR_OVERFLOW:
      return 3;
    default:
      return 4;
  }
}

struct Ctx {
  pp_context* c = nullptr;
  Ctx() {
    if (pp_context_new(&c) != PP_OK) throw std::runtime_error("cannot create context");
  }
  ~Ctx() { pp_context_free(c); }
  Ctx(const Ctx&) = delete;
  Ctx& operator=(const Ctx&) = delete;
};

int report(pp_context* c, pp_status s) {
  if (s != PP_OK && s != PP_NOT_FOUND) std::cerr << "partpat: " << pp_status_name(s) << ": " << pp_last_error(c) << '\n';
  return exit_code(s);
}

void print(pp_text* t) {
  std::fwrite(pp_text_data(t), 1, pp_text_size(t), stdout);
  pp_text_free(t);
}

// "7" or "6..11"
bool parse_range(const std::string& s, int& lo, int& hi) {
  try {
    std::size_t dots = s.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      lo = hi = std::stoi(s, &used);
      return used == s.size();
    }
    lo = std::stoi(s.substr(0, dots), &used);
    if (used != dots) return false;
    std::string rest = s.substr(dots + 2);
    hi = std::stoi(rest, &used);
    return used == rest.size() && lo <= hi;
  } catch (const std::exception&) {
    return false;
  }
}

const std::map<std::string, pp_format> kFormats{{"csv", PP_CSV}, {"json", PP_JSON}};
const std::map<std::string, pp_shape_kind> kKinds{{"ferrers", PP_FERRERS}, {"stack", PP_STACK}};
const std::map<std::string, pp_fill_mode> kModes{{"semi-standard", PP_SEMI_STANDARD}, {"sparse", PP_SPARSE}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern avoidance in set partitions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pp_version());

  unsigned threads = 0;
  std::string cache_path;
  bool no_cache = false;
  app.add_option("--threads", threads, "worker threads (0 = hardware parallelism)");
  app.add_option("--cache", cache_path, "count cache file (default $PARTPAT_CACHE or ~/.cache/partpat/counts.json)");
  app.add_flag("--no-cache", no_cache, "do not read or write the count cache");

  // count
  auto* count = app.add_subcommand("count", "count partitions of [n] avoiding a pattern");
  std::string c_pattern, c_range;
  bool c_blocks = false;
  pp_format c_format = PP_CSV;
  count->add_option("pattern", c_pattern)->required();
  count->add_option("--n", c_range, "n or lo..hi")->required();
  count->add_flag("--by-blocks", c_blocks, "refine by number of blocks");
  count->add_option("--format", c_format)->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  // classify
  auto* cls = app.add_subcommand("classify", "group patterns of one size by their count sequences");
  int k_size = 0;
  std::optional<int> k_horizon;
  bool k_full = false;
  pp_format k_format = PP_CSV;
  cls->add_option("size", k_size)->required()->check(CLI::Range(1, 12));
  cls->add_option("--horizon", k_horizon, "largest n compared (default size + 5)");
  cls->add_flag("--full", k_full, "compute every count up to the horizon");
  cls->add_option("--format", k_format)->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  // witness
  auto* wit = app.add_subcommand("witness", "smallest n separating two patterns");
  std::string w_a, w_b;
  int w_max = 12;
  wit->add_option("p1", w_a)->required();
  wit->add_option("p2", w_b)->required();
  wit->add_option("--max-n", w_max);

  // fillings
  auto* fil = app.add_subcommand("fillings", "0-1 fillings avoiding a matrix pattern");
  fil->require_subcommand(1);
  pp_shape_kind f_kind = PP_FERRERS;
  int f_k = 0;
  auto* fcount = fil->add_subcommand("count", "count fillings of one shape");
  std::string f_shape, f_avoid;
  pp_fill_mode f_mode = PP_SEMI_STANDARD;
  fcount->add_option("--shape", f_shape, "column heights, e.g. 2,4,4")->required();
  fcount->add_option("--avoid", f_avoid, "pattern sequence S of M(S,k)")->required();
  fcount->add_option("--k", f_k, "matrix rows (default max of S)");
  fcount->add_option("--kind", f_kind)->transform(CLI::CheckedTransformer(kKinds, CLI::ignore_case));
  fcount->add_option("--mode", f_mode)->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
  auto* fequiv = fil->add_subcommand("equiv", "compare two matrix patterns on all small shapes");
  std::string e_a, e_b;
  int e_cols = 5, e_rows = 4;
  bool e_refine = false;
  fequiv->add_option("a", e_a)->required();
  fequiv->add_option("b", e_b)->required();
  fequiv->add_option("--k", f_k, "matrix rows (default max of both)");
  fequiv->add_option("--kind", f_kind)->transform(CLI::CheckedTransformer(kKinds, CLI::ignore_case));
  fequiv->add_option("--max-cols", e_cols);
  fequiv->add_option("--max-rows", e_rows);
  fequiv->add_flag("--refine", e_refine, "also compare counts by 1-cells per row");

  // bijection
  auto* bij = app.add_subcommand("bijection", "apply a bijection and verify it on one input");
  std::string b_name, b_input, b_shape;
  bool b_inverse = false, b_plus = false;
  pp_bijection_params prm{};
  prm.k = 1;
  prm.m = 0;
  bij->add_option("--name", b_name, "thm12, fall, sigma, l124, tail, phi, p12112")
      ->required()
      ->check(CLI::IsMember({"thm12", "fall", "sigma", "l124", "tail", "phi", "p12112"}));
  bij->add_option("--apply", b_input, "input sequence (cells for fall)")->required();
  bij->add_flag("--inverse", b_inverse);
  bij->add_option("--p", prm.p);
  bij->add_option("--q", prm.q);
  bij->add_option("--r", prm.r);
  bij->add_option("--k", prm.k);
  bij->add_option("--m", prm.m);
  bij->add_option("--lemma", prm.lemma, "1..4 for l124");
  bij->add_flag("--plus", b_plus, "sigma+ instead of sigma-");
  bij->add_option("--shape", b_shape, "stack shape for fall");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Ctx ctx;
  pp_context* c = ctx.c;
  pp_context_set_threads(c, threads);
  if (!no_cache) {
    pp_status s = pp_context_set_cache(c, cache_path.c_str());
    if (s != PP_OK) return report(c, s);
  }

  if (*count) {
    int lo = 0, hi = 0;
    if (!parse_range(c_range, lo, hi)) {
      std::cerr << "partpat: bad --n '" << c_range << "'\n";
      return 2;
    }
    pp_text* out = nullptr;
    pp_status s = pp_count_table(c, c_pattern.c_str(), lo, hi, c_blocks, c_format, &out);
    if (s == PP_OK) print(out);
    return report(c, s);
  }
  if (*cls) {
    pp_text* out = nullptr;
    size_t classes = 0;
    pp_status s = pp_classify(c, k_size, k_horizon.value_or(k_size + 5), k_full, k_format, &out, &classes);
    if (s == PP_OK) print(out);
    return report(c, s);
  }
  if (*wit) {
    int n = 0;
    pp_status s = pp_witness(c, w_a.c_str(), w_b.c_str(), w_max, &n);
    if (s == PP_OK) std::cout << n << '\n';
    if (s == PP_NOT_FOUND) std::cout << "no witness up to n = " << w_max << '\n';
    return report(c, s);
  }
  if (*fcount) {
    uint64_t n = 0;
    pp_status s = pp_fillings_count(c, f_kind, f_shape.c_str(), f_avoid.c_str(), f_k, f_mode, &n);
    if (s == PP_OK) std::cout << n << '\n';
    return report(c, s);
  }
  if (*fequiv) {
    pp_text* out = nullptr;
    pp_status s = pp_fillings_equiv(c, f_kind, e_a.c_str(), e_b.c_str(), f_k, e_cols, e_rows, e_refine, &out);
    if (out) print(out);
    return report(c, s);
  }
  if (*bij) {
    prm.plus = b_plus;
    prm.shape = b_shape.empty() ? nullptr : b_shape.c_str();
    pp_text* out = nullptr;
    pp_status s = pp_bijection(c, b_name.c_str(), b_input.c_str(), &prm, b_inverse, &out);
    if (s == PP_OK) print(out);
    return report(c, s);
  }
  return 2;
}
