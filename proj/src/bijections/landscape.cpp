#include <algorithm>

#include "partpat/bijections.hpp"
#include "partpat/containment.hpp"
#include "partpat/error.hpp"

namespace partpat {

std::string LandscapeWord::str() const {
  std::string out;
  for (char c : letters) {
    if (c == 'K')
      out += level <= 9 ? std::to_string(level) : std::string("k");
    else
      out += c;
  }
  return out;
}

bool is_landscape_word(std::string_view w) {
  if (w.size() < 2 || w[0] != 'L' || w[1] != 'K') return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    char c = w[i];
    if (c != 'L' && c != 'K' && c != 'H') return false;
    if (i && c != 'K' && w[i - 1] == c) return false;
  }
  return true;
}

Landscape landscape(const Partition& p, int k) {
  if (k < 2 || k > p.blocks()) throw PreconditionError("landscape needs 2 <= k <= m");
  Landscape out;
  out.word.level = k;
  std::vector<Symbol> cur;
  char kind = 0;
  auto flush = [&] {
    if (!kind) return;
    (kind == 'L' ? out.low : out.high).emplace_back(cur);
    out.word.letters += kind;
    cur.clear();
    kind = 0;
  };
  for (Symbol v : p.seq()) {
    if (v == k) {
      flush();
      out.word.letters += 'K';
      continue;
    }
    char c = v < k ? 'L' : 'H';
    if (kind != c) flush();
    kind = c;
    cur.push_back(v);
  }
  flush();
  return out;
}

namespace {

int count_of(std::string_view w, char c) { return static_cast<int>(std::count(w.begin(), w.end(), c)); }

// For consecutive occurrences of `c`, whether `sep` occurs between them.
std::vector<bool> separations(std::string_view w, char c, char sep) {
  std::vector<bool> out;
  bool seen = false, between = false;
  for (char x : w) {
    if (x == c) {
      if (seen) out.push_back(between);
      seen = true;
      between = false;
    } else if (x == sep) {
      between = true;
    }
  }
  return out;
}

}  // namespace

bool compatible(std::string_view a, std::string_view b) {
  return is_landscape_word(a) && is_landscape_word(b) && a.size() == b.size() && count_of(a, 'L') == count_of(b, 'L') &&
         count_of(a, 'H') == count_of(b, 'H');
}

bool l_compatible(std::string_view a, std::string_view b) {
  return compatible(a, b) && separations(a, 'L', 'H') == separations(b, 'L', 'H');
}

bool h_compatible(std::string_view a, std::string_view b) {
  return compatible(a, b) && separations(a, 'H', 'L') == separations(b, 'H', 'L');
}

Partition shuffle(const Partition& p, const LandscapeWord& target) {
  Landscape l = landscape(p, target.level);
  if (!is_landscape_word(target.letters)) throw PreconditionError("shuffle target is not a landscape word");
  if (!compatible(l.word.letters, target.letters)) throw PreconditionError("shuffle target is not compatible");
  std::vector<Symbol> out;
  std::size_t li = 0, hi = 0;
  for (char c : target.letters) {
    if (c == 'K') {
      out.push_back(static_cast<Symbol>(target.level));
    } else {
      const SymbolSeq& cl = c == 'L' ? l.low[li++] : l.high[hi++];
      out.insert(out.end(), cl.begin(), cl.end());
    }
  }
  if (!validate_partition(out)) throw InvariantError("shuffle produced a non-canonical sequence");
  return Partition::from(SymbolSeq(std::move(out)));
}

// ---------------------------------------------------------------- patterns

SymbolSeq hybrid_source(HybridMap map, HybridParams x) {
  const SymbolSeq one{1}, two{2}, three{3}, four{4}, head{1, 2, 3};
  switch (map) {
    case HybridMap::SigmaMinus:
      return one + repeat(2, x.p + 1) + one + repeat(2, x.q) + three + repeat(2, x.r);
    case HybridMap::SigmaPlus:
      return one + repeat(2, x.p + 2) + one + repeat(2, x.q) + three + repeat(2, x.r);
    case HybridMap::Lemma124a:
      return head + repeat(2, x.p) + four + one + repeat(2, x.q);
    case HybridMap::Lemma124b:
      return head + repeat(2, x.p) + one + four + repeat(2, x.q);
    case HybridMap::Lemma134a:
      return SymbolSeq{1, 2} + repeat(3, x.p + 1) + one + repeat(3, x.q) + four;
    case HybridMap::Lemma134b:
      return SymbolSeq{1, 2} + repeat(3, x.p + 1) + four + one + repeat(3, x.q);
  }
  throw PreconditionError("unknown hybrid map");
}

SymbolSeq hybrid_target(HybridMap map, HybridParams x) {
  const SymbolSeq one{1}, three{3}, four{4}, head{1, 2, 3};
  switch (map) {
    case HybridMap::SigmaMinus:
      return one + repeat(2, x.p + 1) + three + repeat(2, x.q) + one + repeat(2, x.r);
    case HybridMap::SigmaPlus:
      return one + repeat(2, x.p + 1) + one + repeat(2, x.q) + three + repeat(2, x.r + 1);
    case HybridMap::Lemma124a:
      return head + repeat(2, x.p) + four + repeat(2, x.q) + one;
    case HybridMap::Lemma124b:
      return head + one + repeat(2, x.p) + four + repeat(2, x.q);
    case HybridMap::Lemma134a:
      return SymbolSeq{1, 2} + repeat(3, x.p + 1) + one + four + repeat(3, x.q);
    case HybridMap::Lemma134b:
      return SymbolSeq{1, 2, 3, 4} + repeat(3, x.p) + one + repeat(3, x.q);
  }
  throw PreconditionError("unknown hybrid map");
}

int hybrid_level_symbol(HybridMap map) {
  return map == HybridMap::Lemma134a || map == HybridMap::Lemma134b ? 3 : 2;
}

bool contains_pattern_at_level(const Partition& p, const SymbolSeq& pattern, int level_symbol, int k) {
  return find_pinned(p.seq().view(), pattern.view(), level_symbol, k).has_value();
}

bool is_hybrid(const Partition& p, HybridMap map, HybridParams prm, int k) {
  SymbolSeq src = hybrid_source(map, prm), tgt = hybrid_target(map, prm);
  int sym = hybrid_level_symbol(map);
  for (int j = 1; j <= p.blocks(); ++j) {
    const SymbolSeq& pat = j < k ? tgt : src;
    if (contains_pattern_at_level(p, pat, sym, j)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- surgeries

namespace {

using Word = std::string;

std::vector<int> k_positions(const Word& w, std::size_t from = 0, std::size_t to = std::string::npos) {
  std::vector<int> out;
  to = std::min(to, w.size());
  for (std::size_t i = from; i < to; ++i)
    if (w[i] == 'K') out.push_back(static_cast<int>(i));
  return out;
}

int count_k(const Word& w, std::size_t from, std::size_t to) { return static_cast<int>(k_positions(w, from, to).size()); }

Word sub(const Word& w, std::size_t from, std::size_t to) { return w.substr(from, to - from); }
Word rev(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

void require(bool ok, const char* clause) {
  if (!ok) throw InvariantError(clause);
}

// x = shortest prefix with a K's, returns its length
std::size_t prefix_with(const Word& w, int a) {
  if (a == 0) return 0;
  auto ks = k_positions(w);
  return static_cast<std::size_t>(ks[a - 1]) + 1;
}

// start of the shortest suffix with a K's
std::size_t suffix_with(const Word& w, int a) {
  if (a == 0) return w.size();
  auto ks = k_positions(w);
  return static_cast<std::size_t>(ks[ks.size() - a]);
}

std::optional<Word> sigma_minus(const Word& w, HybridParams x) {
  int t = x.p + x.q + x.r;
  if (count_k(w, 0, w.size()) < t + 1) return std::nullopt;
  std::size_t a = prefix_with(w, x.p + 1), b = suffix_with(w, x.r);
  return sub(w, 0, a) + rev(sub(w, a, b)) + sub(w, b, w.size());
}

std::optional<Word> sigma_plus(const Word& w, HybridParams x, bool inverse) {
  if (count_k(w, 0, w.size()) < x.p + x.q + x.r + 2) return std::nullopt;
  std::size_t a = prefix_with(w, x.p + 1), b = suffix_with(w, x.r);
  if (!inverse) {
    std::size_t s_end = prefix_with(w, x.p + 2);
    return sub(w, 0, a) + sub(w, s_end, b) + rev(sub(w, a, s_end)) + sub(w, b, w.size());
  }
  Word u = sub(w, a, b);
  std::size_t j = u.rfind('K');
  require(j != std::string::npos, "lem-sigma+ inverse: no K between x and z");
  return sub(w, 0, a) + rev(u.substr(j)) + u.substr(0, j) + sub(w, b, w.size());
}

// --- 1-2-4 lemmas. `extra[i]` marks H letters whose cluster has a symbol > k+1.

std::optional<std::size_t> leftmost_extra_high(const Word& w, const std::vector<bool>& extra, int p) {
  std::size_t h1 = w.find('H');
  if (h1 == std::string::npos) return std::nullopt;
  for (std::size_t i = h1 + 1; i < w.size(); ++i)
    if (w[i] == 'H' && extra[i] && count_k(w, h1 + 1, i) >= p) return i;
  return std::nullopt;
}

std::optional<Word> lemma124a(const Word& w, const std::vector<bool>& extra, HybridParams x, bool inverse) {
  int p = x.p, q = x.q;
  auto hp = leftmost_extra_high(w, extra, p);
  if (!hp) return std::nullopt;
  std::size_t i = *hp;
  if (count_k(w, i + 1, w.size()) < q) return std::nullopt;
  Word head = sub(w, 0, i + 1);
  if (!inverse) {
    auto ks = k_positions(w, i + 1);
    std::vector<int> last(ks.end() - q, ks.end());  // k_q .. k_1
    Word y = sub(w, i + 1, last[0]);
    require(y.find('L') == std::string::npos, "lem-124: y contains a low cluster");
    std::vector<Word> s(q);
    for (int j = 0; j < q; ++j) s[j] = sub(w, last[j] + 1, j + 1 < q ? last[j + 1] : w.size());
    Word hstar = !s[0].empty() && s[0][0] == 'H' ? "H" : "";
    Word out = head + s[0].substr(hstar.size());
    for (int j = 1; j < q; ++j) out += "K" + s[j];
    return out + "K" + hstar + y;
  }
  auto ks = k_positions(w, i + 1);
  std::vector<int> first(ks.begin(), ks.begin() + q);
  Word s1m = sub(w, i + 1, first[0]);
  std::vector<Word> s(q);
  for (int j = 1; j < q; ++j) s[j] = sub(w, first[j - 1] + 1, first[j]);
  Word rest = sub(w, first[q - 1] + 1, w.size());
  Word hstar = !rest.empty() && rest[0] == 'H' ? "H" : "";
  Word y = rest.substr(hstar.size());
  s[0] = hstar + s1m;
  Word out = head + y;
  for (int j = 0; j < q; ++j) out += "K" + s[j];
  return out;
}

std::optional<Word> lemma124b(const Word& w, const std::vector<bool>& extra, HybridParams x, bool inverse) {
  int p = x.p, q = x.q;
  std::size_t h1 = w.find('H');
  if (h1 == std::string::npos) return std::nullopt;
  std::optional<std::size_t> hp;
  for (std::size_t i = w.size(); i-- > 0;)
    if (w[i] == 'H' && extra[i] && count_k(w, i + 1, w.size()) >= q) {
      hp = i;
      break;
    }
  if (!hp || *hp <= h1 || count_k(w, h1 + 1, *hp) < p) return std::nullopt;
  std::size_t i = *hp;
  Word head = sub(w, 0, h1 + 1), tail = sub(w, i, w.size());
  if (!inverse) {
    auto ks = k_positions(w, h1 + 1, i);
    std::vector<Word> s(p);
    for (int j = 0; j < p; ++j) s[j] = sub(w, j ? ks[j - 1] + 1 : h1 + 1, ks[j]);
    Word y = sub(w, ks[p - 1] + 1, i);
    require(y.find('L') == std::string::npos, "second 1-2-4 lemma: y contains a low cluster");
    Word hstar = !s[p - 1].empty() && s[p - 1].back() == 'H' ? "H" : "";
    s[p - 1].resize(s[p - 1].size() - hstar.size());
    Word out = head + rev(y) + "K" + hstar + s[0];
    for (int j = 1; j < p; ++j) out += "K" + s[j];
    return out + tail;
  }
  auto ks = k_positions(w, h1 + 1, i);
  std::vector<int> last(ks.end() - p, ks.end());
  Word ybar = sub(w, h1 + 1, last[0]);
  std::vector<Word> seg(p);
  for (int j = 0; j < p; ++j) seg[j] = sub(w, last[j] + 1, j + 1 < p ? last[j + 1] : i);
  Word hstar = !seg[0].empty() && seg[0][0] == 'H' ? "H" : "";
  seg[0] = seg[0].substr(hstar.size());
  seg[p - 1] += hstar;
  Word out = head;
  for (int j = 0; j < p; ++j) out += seg[j] + "K";
  return out + rev(ybar) + tail;
}

// --- 1-3-4 lemmas. `extra[i]` marks L letters whose cluster has a symbol < k-1.

std::optional<Word> lemma134a(const Word& w, const std::vector<bool>& extra, HybridParams x, bool inverse) {
  int p = x.p, q = x.q;
  std::optional<std::size_t> lp;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] == 'L' && extra[i] && count_k(w, 0, i) >= p + 1) {
      lp = i;
      break;
    }
  if (!lp) return std::nullopt;
  std::size_t i = *lp;
  if (count_k(w, i + 1, w.size()) < q) return std::nullopt;
  Word head = sub(w, 0, i + 1);
  if (!inverse) {
    auto ks = k_positions(w, i + 1);
    std::vector<Word> s(q);
    for (int j = 0; j < q; ++j) s[j] = sub(w, j ? ks[j - 1] + 1 : i + 1, ks[j]);
    Word y = sub(w, ks[q - 1] + 1, w.size());
    require(y.find('H') == std::string::npos, "lem-134: y contains a high cluster");
    Word lstar = !y.empty() && y[0] == 'L' ? "L" : "";
    Word out = head + y.substr(lstar.size()) + "K" + lstar + s[0];
    for (int j = 1; j < q; ++j) out += "K" + s[j];
    return out;
  }
  auto ks = k_positions(w, i + 1);
  std::vector<int> last(ks.end() - q, ks.end());
  Word ym = sub(w, i + 1, last[0]);
  std::vector<Word> seg(q);
  for (int j = 0; j < q; ++j) seg[j] = sub(w, last[j] + 1, j + 1 < q ? last[j + 1] : w.size());
  Word lstar = !seg[0].empty() && seg[0][0] == 'L' ? "L" : "";
  seg[0] = seg[0].substr(lstar.size());
  Word out = head;
  for (int j = 0; j < q; ++j) out += seg[j] + "K";
  return out + lstar + ym;
}

std::optional<Word> lemma134b(const Word& w, const std::vector<bool>& extra, HybridParams x, bool inverse) {
  int p = x.p, q = x.q;
  if (p == 0) return std::nullopt;  // source and target coincide
  std::optional<std::size_t> lp;
  for (std::size_t i = w.size(); i-- > 0;)
    if (w[i] == 'L' && extra[i] && count_k(w, i + 1, w.size()) >= q) {
      lp = i;
      break;
    }
  if (!lp || count_k(w, 0, *lp) < p + 1) return std::nullopt;
  std::size_t i = *lp;
  Word tail = sub(w, i, w.size());
  auto ks = k_positions(w, 0, i);  // ks[0] = 1
  if (!inverse) {
    std::vector<Word> s(p);
    for (int j = 0; j < p; ++j) s[j] = sub(w, ks[j] + 1, ks[j + 1]);
    Word y = sub(w, ks[p] + 1, i);
    require(y.find('H') == std::string::npos, "fourth lemma: y contains a high cluster");
    Word lstar = !s[p - 1].empty() && s[p - 1].back() == 'L' ? "L" : "";
    s[p - 1].resize(s[p - 1].size() - lstar.size());
    Word out = "LK" + lstar + rev(y);
    for (int j = 0; j < p; ++j) out += "K" + s[j];
    return out + tail;
  }
  std::vector<int> last(ks.end() - p, ks.end());
  Word headw = sub(w, 2, last[0]);
  Word lstar = !headw.empty() && headw[0] == 'L' ? "L" : "";
  Word ybar = headw.substr(lstar.size());
  std::vector<Word> seg(p);
  for (int j = 0; j < p; ++j) seg[j] = sub(w, last[j] + 1, j + 1 < p ? last[j + 1] : i);
  seg[p - 1] += lstar;
  Word out = "L";
  for (int j = 0; j < p; ++j) out += "K" + seg[j];
  return out + "K" + rev(ybar) + tail;
}

void check_params(HybridMap map, HybridParams x) {
  bool ok = x.p >= 0 && x.q >= 0 && x.r >= 0;
  switch (map) {
    case HybridMap::SigmaMinus:
    case HybridMap::SigmaPlus:
      break;
    case HybridMap::Lemma124a:
    case HybridMap::Lemma124b:
      ok = ok && x.p >= 1 && x.q >= 1 && x.r == 0;
      break;
    case HybridMap::Lemma134a:
    case HybridMap::Lemma134b:
      ok = ok && x.q >= 1 && x.r == 0;
      break;
  }
  if (!ok) throw PreconditionError("parameters outside the lemma's range");
}

}  // namespace

Partition hybrid_step(const Partition& pi, HybridMap map, HybridParams prm, int k, bool inverse) {
  if (k < 2 || k > pi.blocks()) return pi;
  Landscape l = landscape(pi, k);
  const Word& w = l.word.letters;
  std::vector<bool> extra(w.size(), false);
  {
    std::size_t li = 0, hi = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == 'L') {
        const auto& c = l.low[li++];
        extra[i] = std::any_of(c.begin(), c.end(), [&](Symbol v) { return v < k - 1; });
      } else if (w[i] == 'H') {
        const auto& c = l.high[hi++];
        extra[i] = std::any_of(c.begin(), c.end(), [&](Symbol v) { return v > k + 1; });
      }
    }
  }
  std::optional<Word> nw;
  bool need_l = false, need_h = false;
  switch (map) {
    case HybridMap::SigmaMinus:
      nw = sigma_minus(w, prm);
      break;
    case HybridMap::SigmaPlus:
      nw = sigma_plus(w, prm, inverse);
      break;
    case HybridMap::Lemma124a:
      nw = lemma124a(w, extra, prm, inverse);
      need_l = true;
      break;
    case HybridMap::Lemma124b:
      nw = lemma124b(w, extra, prm, inverse);
      need_l = true;
      break;
    case HybridMap::Lemma134a:
      nw = lemma134a(w, extra, prm, inverse);
      need_h = true;
      break;
    case HybridMap::Lemma134b:
      nw = lemma134b(w, extra, prm, inverse);
      need_h = true;
      break;
  }
  if (!nw) return pi;
  require(is_landscape_word(*nw), "surgery result is not a landscape word");
  require(compatible(w, *nw), "surgery result is not compatible with the landscape");
  if (need_l) require(l_compatible(w, *nw), "surgery result is not L-compatible");
  if (need_h) require(h_compatible(w, *nw), "surgery result is not H-compatible");
  return shuffle(pi, LandscapeWord{k, *nw});
}

Partition hybrid_chain(const Partition& pi, HybridMap map, HybridParams prm, bool inverse) {
  check_params(map, prm);
  SymbolSeq src = hybrid_source(map, prm), tgt = hybrid_target(map, prm);
  const SymbolSeq& in_pat = inverse ? tgt : src;
  const SymbolSeq& out_pat = inverse ? src : tgt;
  if (contains(pi.seq(), in_pat)) throw PreconditionError("input contains " + in_pat.str());
  int n = static_cast<int>(pi.size());
  Partition cur = pi;
  if (!inverse)
    for (int k = 2; k <= n - 1; ++k) cur = hybrid_step(cur, map, prm, k, false);
  else
    for (int k = n - 1; k >= 2; --k) cur = hybrid_step(cur, map, prm, k, true);
  require(!contains(cur.seq(), out_pat), "hybrid chain output contains the target pattern");
  return cur;
}

Partition hybrid_chain_sigma(const Partition& p, bool plus, int pp, int q, int r, bool inverse) {
  return hybrid_chain(p, plus ? HybridMap::SigmaPlus : HybridMap::SigmaMinus, {pp, q, r}, inverse);
}

Partition hybrid_chain_124(const Partition& p, int lemma, int pp, int q, bool inverse) {
  static const HybridMap maps[] = {HybridMap::Lemma124a, HybridMap::Lemma124b, HybridMap::Lemma134a,
                                   HybridMap::Lemma134b};
  if (lemma < 1 || lemma > 4) throw PreconditionError("lemma must be 1..4");
  return hybrid_chain(p, maps[lemma - 1], {pp, q, 0}, inverse);
}

}  // namespace partpat
