#include "partpat/containment.hpp"

#include <algorithm>

#include "partpat/error.hpp"

namespace partpat {

namespace {

std::vector<int> ranks_of(std::span<const Symbol> pat, int& distinct) {
  std::vector<Symbol> vals(pat.begin(), pat.end());
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  distinct = static_cast<int>(vals.size());
  std::vector<int> r;
  r.reserve(pat.size());
  for (Symbol v : pat) r.push_back(static_cast<int>(std::lower_bound(vals.begin(), vals.end(), v) - vals.begin()));
  return r;
}

// val[a] == 0 means unassigned
inline bool fits(const int* val, int d, int a, int v) {
  if (val[a]) return val[a] == v;
  for (int b = 0; b < a; ++b)
    if (val[b] && val[b] >= v) return false;
  for (int b = a + 1; b < d; ++b)
    if (val[b] && val[b] <= v) return false;
  return true;
}

struct Forward {
  std::span<const Symbol> hay;
  const std::vector<int>& rank;
  int d;
  std::vector<int> val;
  std::vector<std::size_t> pos;

  bool run(std::size_t i, std::size_t from) {
    std::size_t k = rank.size();
    if (i == k) return true;
    int a = rank[i];
    for (std::size_t p = from; p + (k - i) <= hay.size(); ++p) {
      int v = hay[p];
      if (!fits(val.data(), d, a, v)) continue;
      bool fresh = val[a] == 0;
      val[a] = v;
      pos[i] = p;
      if (run(i + 1, p + 1)) return true;
      if (fresh) val[a] = 0;
    }
    return false;
  }
};

std::optional<Occurrence> search(std::span<const Symbol> hay, std::span<const Symbol> pat, int pinned_rank,
                                 int value) {
  if (pat.empty()) return Occurrence{};
  int d = 0;
  std::vector<int> rank = ranks_of(pat, d);
  Forward f{hay, rank, d, std::vector<int>(d, 0), std::vector<std::size_t>(pat.size())};
  if (pinned_rank >= 0) f.val[pinned_rank] = value;
  if (!f.run(0, 0)) return std::nullopt;
  return Occurrence{f.pos};
}

}  // namespace

std::optional<Occurrence> find_occurrence(std::span<const Symbol> hay, std::span<const Symbol> pat) {
  return search(hay, pat, -1, 0);
}

bool contains(std::span<const Symbol> hay, std::span<const Symbol> pat) {
  if (pat.size() > hay.size()) return false;
  return find_occurrence(hay, pat).has_value();
}

std::optional<Occurrence> find_pinned(std::span<const Symbol> hay, std::span<const Symbol> pat, int pinned,
                                      int value) {
  int d = 0;
  std::vector<int> rank = ranks_of(pat, d);
  int pr = -1;
  for (std::size_t i = 0; i < pat.size(); ++i)
    if (pat[i] == pinned) pr = rank[i];
  if (pr < 0) throw PreconditionError("pinned symbol does not occur in pattern");
  return search(hay, pat, pr, value);
}

bool contains_at_level(const Partition& p, const SymbolSeq& sigma, int k) {
  bool has2 = false;
  for (Symbol v : sigma) {
    if (v < 1 || v > 3) throw PreconditionError("leveled pattern must use symbols 1,2,3");
    has2 |= v == 2;
  }
  if (!has2) throw PreconditionError("leveled pattern must contain the symbol 2");
  if (k < 2 || k >= p.blocks()) return false;
  return find_pinned(p.seq().view(), sigma.view(), 2, k).has_value();
}

namespace {

bool suffix_shape(const SymbolSeq& tau, int filler, bool check_4_ends, bool check_1_last) {
  if (tau.size() < 4 || tau[0] != 1 || tau[1] != 2 || tau[2] != 3) return false;
  int ones = 0, fours = 0;
  std::size_t n = tau.size();
  for (std::size_t i = 3; i < n; ++i) {
    int v = tau[i];
    if (v == 1)
      ++ones;
    else if (v == 4)
      ++fours;
    else if (v != filler)
      return false;
  }
  if (ones != 1 || fours != 1) return false;
  if (check_4_ends && (tau[3] == 4 || tau[n - 1] == 4)) return false;
  if (check_1_last && tau[n - 1] == 1) return false;
  return true;
}

}  // namespace

bool is_124_pattern(const SymbolSeq& tau) { return suffix_shape(tau, 2, true, false); }
bool is_134_pattern(const SymbolSeq& tau) { return suffix_shape(tau, 3, false, true); }

bool contains_124_at_level(const Partition& p, const SymbolSeq& tau, int k) {
  if (!is_124_pattern(tau)) throw PreconditionError("not a 1-2-4 pattern: " + tau.str());
  return find_pinned(p.seq().view(), tau.view(), 2, k).has_value();
}

bool contains_134_at_level(const Partition& p, const SymbolSeq& tau, int k) {
  if (!is_134_pattern(tau)) throw PreconditionError("not a 1-3-4 pattern: " + tau.str());
  return find_pinned(p.seq().view(), tau.view(), 3, k).has_value();
}

Matcher::Matcher(std::span<const Symbol> pat) {
  rank_ = ranks_of(pat, d_);
  k_ = static_cast<int>(pat.size());
}

bool Matcher::back(const Symbol* s, int i, int pos_max, int* val) const {
  if (i < 0) return true;
  int a = rank_[i];
  for (int p = pos_max; p >= i; --p) {
    int v = s[p];
    if (!fits(val, d_, a, v)) continue;
    bool fresh = val[a] == 0;
    val[a] = v;
    if (back(s, i - 1, p - 1, val)) {
      if (fresh) val[a] = 0;
      return true;
    }
    if (fresh) val[a] = 0;
  }
  return false;
}

bool Matcher::completes(const Symbol* s, int len) const {
  if (k_ == 0) return true;
  if (len < k_) return false;
  int buf[64];
  std::vector<int> big;
  int* val = buf;
  if (d_ > 64) {
    big.assign(d_, 0);
    val = big.data();
  } else {
    std::fill(buf, buf + d_, 0);
  }
  val[rank_[k_ - 1]] = s[len - 1];
  return back(s, k_ - 2, len - 2, val);
}

}  // namespace partpat
