#include <algorithm>
#include <functional>

#include "partpat/bijections.hpp"
#include "partpat/error.hpp"

namespace partpat {

bool is_tail(const SymbolSeq& s) {
  if (s.empty()) return false;
  int lo = 1 << 30, mid = 1 << 30;  // smallest value, smallest top of an ascent
  for (Symbol v : s) {
    if (v > mid) return false;
    if (v > lo) mid = std::min<int>(mid, v);
    lo = std::min<int>(lo, v);
  }
  return true;
}

int tail_rank(const SymbolSeq& s) { return static_cast<int>(s.size()) + s.max() - 1; }

std::vector<SymbolSeq> tails_of_rank(int n) {
  std::vector<SymbolSeq> out;
  if (n < 1) return out;
  std::vector<Symbol> cur;
  for (int top = 1; top <= n; ++top) {
    int len = n - top + 1;
    std::function<void(int, int, bool)> go = [&](int lo, int mid, bool hit) {
      if (static_cast<int>(cur.size()) == len) {
        if (hit) out.emplace_back(cur);
        return;
      }
      for (int v = 1; v <= std::min(top, mid); ++v) {
        cur.push_back(static_cast<Symbol>(v));
        go(std::min(lo, v), v > lo ? std::min(mid, v) : mid, hit || v == top);
        cur.pop_back();
      }
    };
    go(1 << 30, 1 << 30, false);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TailSplit tail_decompose(const Partition& p) {
  int m = p.blocks();
  if (m == 0) throw PreconditionError("empty partition has no tail");
  for (int i = 0; i + 1 < m; ++i)
    if (p[i] != i + 1) throw PreconditionError("partition contains 1123");
  SymbolSeq s = p.seq().slice(m - 1, p.size());
  if (!is_tail(s)) throw PreconditionError("partition contains 1123");
  return {m, s};
}

Partition tail_compose(const TailSplit& t) {
  if (!is_tail(t.tail) || t.tail.max() != t.m) throw PreconditionError("not a tail with maximum m");
  std::vector<Symbol> v;
  for (int i = 1; i < t.m; ++i) v.push_back(static_cast<Symbol>(i));
  v.insert(v.end(), t.tail.begin(), t.tail.end());
  return Partition::from(SymbolSeq(std::move(v)));
}

namespace {

struct Split {
  SymbolSeq s0;
  int b;
  int k;
};

// S = S0 1^b k with last(S0) != 1
Split split_tail(const SymbolSeq& s) {
  if (!is_tail(s)) throw PreconditionError("not a 123-avoiding sequence");
  int k = s.back();
  std::size_t e = s.size() - 1;
  while (e > 0 && s[e - 1] == 1) --e;
  return {s.slice(0, e), static_cast<int>(s.size() - 1 - e), k};
}

bool f1_case(const Split& x) { return !x.s0.empty() && x.s0.back() >= x.k; }

}  // namespace

SymbolSeq tail_f1(const SymbolSeq& s, int k) {
  Split x = split_tail(s);
  if (x.k != k || k < 2 || !f1_case(x)) throw PreconditionError("f1 needs S = S0 1^b k with last(S0) >= k >= 2");
  return x.s0 + repeat(k - 1, x.b);
}

SymbolSeq tail_f2(const SymbolSeq& s, int k) {
  Split x = split_tail(s);
  if (x.k != k || k < 2 || f1_case(x)) throw PreconditionError("f2 needs S = S0 1^b k with S0 empty or last(S0) < k");
  return x.s0.shifted(-1) + repeat(k - 1, x.b + 1);
}

SymbolSeq tail_reduce(const SymbolSeq& s) {
  Split x = split_tail(s);
  if (s.size() == 1 && x.k == 1) throw PreconditionError("rank-1 tail has no reduction");
  if (x.k == 1) return s.slice(0, s.size() - 1);
  return f1_case(x) ? tail_f1(s, x.k) : tail_f2(s, x.k);
}

SymbolSeq tail_extend(const SymbolSeq& s, int k) {
  if (!is_tail(s)) throw PreconditionError("not a 123-avoiding sequence");
  if (k < 1) throw PreconditionError("k must be positive");
  if (static_cast<int>(s.back()) < k - 1) throw PreconditionError("last symbol must be at least k-1");
  if (k == 1) return s + SymbolSeq{1};
  std::size_t e = s.size();
  while (e > 0 && s[e - 1] == k - 1) --e;
  int c = static_cast<int>(s.size() - e);
  SymbolSeq s0 = s.slice(0, e);
  SymbolSeq out;
  if (!s0.empty() && s0.back() >= k) {
    out = s0 + repeat(1, c) + SymbolSeq{k};
  } else {
    if (c < 1) throw InvariantError("tail inverse: f2 branch with empty (k-1)-suffix");
    out = s0.shifted(1) + repeat(1, c - 1) + SymbolSeq{k};
  }
  if (!is_tail(out)) throw InvariantError("tail inverse produced a sequence containing 123");
  return out;
}

}  // namespace partpat
