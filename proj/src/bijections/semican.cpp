#include <algorithm>

#include "partpat/bijections.hpp"
#include "partpat/containment.hpp"
#include "partpat/error.hpp"

namespace partpat {

namespace {

using Cols = std::vector<int>;  // 0-based column indices

Cols columns_of(const std::vector<std::uint8_t>& col, int row) {
  Cols out;
  for (std::size_t j = 0; j < col.size(); ++j)
    if (col[j] == row) out.push_back(static_cast<int>(j));
  return out;
}

void check_rows(const SparseMatrix& m, int x) {
  if (x < 1 || x + 1 > m.rows) throw PreconditionError("pseudoswap rows out of range");
  for (auto r : m.col)
    if (r > m.rows) throw PreconditionError("sparse matrix entry above the top row");
}

void swap_rows(std::vector<std::uint8_t>& col, int x, const Cols& keep) {
  for (std::size_t j = 0; j < col.size(); ++j) {
    if (std::find(keep.begin(), keep.end(), static_cast<int>(j)) != keep.end()) continue;
    if (col[j] == x)
      col[j] = static_cast<std::uint8_t>(x + 1);
    else if (col[j] == x + 1)
      col[j] = static_cast<std::uint8_t>(x);
  }
}

// rear y-columns with respect to row x, and the separating column (-1 if none)
std::pair<Cols, int> rear_columns(const std::vector<std::uint8_t>& col, int x) {
  Cols xs = columns_of(col, x), ys = columns_of(col, x + 1);
  int sep = -1;
  for (int c : xs)
    if (c > ys.front() && c < ys.back()) sep = c;
  Cols rear;
  if (sep >= 0)
    for (int c : ys)
      if (c > sep) rear.push_back(c);
  return {rear, sep};
}

// y-columns between the last two x-columns
Cols middle_columns(const std::vector<std::uint8_t>& col, int x) {
  Cols xs = columns_of(col, x), ys = columns_of(col, x + 1);
  Cols mid;
  if (xs.size() < 2) return mid;
  for (int c : ys)
    if (c > xs[xs.size() - 2] && c < xs.back()) mid.push_back(c);
  return mid;
}

}  // namespace

bool avoids_12112_in_rows(const SparseMatrix& m, int x, int y) {
  static const char pat[] = {0, 1, 0, 0, 1};
  int at = 0;
  for (auto r : m.col) {
    int want = pat[at] == 0 ? x : y;
    if (r == want && ++at == 5) return false;
  }
  return true;
}

SparseMatrix pseudoswap(const SparseMatrix& m, int x) {
  check_rows(m, x);
  Cols xs = columns_of(m.col, x), ys = columns_of(m.col, x + 1);
  if (xs.empty() || ys.empty() || !(xs.front() < ys.front() && ys.back() < xs.back()))
    throw PreconditionError("pseudoswap needs f_x < f_y <= l_y < l_x");
  if (!avoids_12112_in_rows(m, x, x + 1)) throw PreconditionError("rows contain 12112");
  auto [rear, sep] = rear_columns(m.col, x);
  SparseMatrix out = m;
  Cols keep;
  if (rear.size() > 1) keep.assign(rear.begin(), rear.end() - 1);
  swap_rows(out.col, x, keep);
  return out;
}

SparseMatrix pseudoswap_inverse(const SparseMatrix& m, int x) {
  check_rows(m, x);
  Cols xs = columns_of(m.col, x), ys = columns_of(m.col, x + 1);
  if (xs.empty() || ys.empty() || !(ys.front() < xs.front() && xs.back() < ys.back()))
    throw PreconditionError("inverse pseudoswap needs f_y < f_x <= l_x < l_y");
  if (!avoids_12112_in_rows(m, x, x + 1)) throw PreconditionError("rows contain 12112");
  Cols mid = middle_columns(m.col, x);
  SparseMatrix out = m;
  Cols keep;
  if (mid.size() > 1) keep.assign(mid.begin() + 1, mid.end());
  swap_rows(out.col, x, keep);
  return out;
}

// ---------------------------------------------------------------- (k,p,q)

namespace {

std::vector<int> firsts(const SymbolSeq& s, int m) {
  std::vector<int> f(m + 1, -1);
  for (std::size_t j = s.size(); j-- > 0;) f[s[j]] = static_cast<int>(j);
  return f;
}

std::vector<int> lasts(const SymbolSeq& s, int m) {
  std::vector<int> l(m + 1, -1);
  for (std::size_t j = 0; j < s.size(); ++j) l[s[j]] = static_cast<int>(j);
  return l;
}

SparseMatrix to_sparse(const SymbolSeq& s, int m) { return {m, {s.begin(), s.end()}}; }
SymbolSeq from_sparse(const SparseMatrix& a) { return SymbolSeq(std::vector<Symbol>(a.col.begin(), a.col.end())); }

bool semi_standard(const SymbolSeq& s, int m) {
  std::vector<bool> seen(m + 1, false);
  for (Symbol v : s) {
    if (v < 1 || v > m) return false;
    seen[v] = true;
  }
  return std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
}

// Y-columns inside the open interval (lo, hi) for the rows y > p+1 with f_y < bound.
Cols y_columns(const SymbolSeq& s, int m, int p, int bound, int lo, int hi) {
  auto f = firsts(s, m);
  Cols out;
  for (int j = lo + 1; j < hi; ++j) {
    int r = s[j];
    if (r > p + 1 && f[r] < bound) out.push_back(j);
  }
  return out;
}

// Refill the positions of first ∪ second (sorted) with the symbols of `first`
// then those of `second`, each group in its own order.
SymbolSeq regroup(const SymbolSeq& s, const Cols& first, const Cols& second) {
  Cols pos = first;
  pos.insert(pos.end(), second.begin(), second.end());
  std::sort(pos.begin(), pos.end());
  std::vector<Symbol> v(s.begin(), s.end()), vals;
  for (int c : first) vals.push_back(s[c]);
  for (int c : second) vals.push_back(s[c]);
  for (std::size_t i = 0; i < pos.size(); ++i) v[pos[i]] = vals[i];
  return SymbolSeq(std::move(v));
}

void require(bool ok, const char* clause) {
  if (!ok) throw InvariantError(clause);
}

}  // namespace

std::optional<KpqMatrix> as_kpq(const SymbolSeq& s, int m, int k) {
  if (m < 1 || k < 1 || k > m || !semi_standard(s, m)) return std::nullopt;
  auto f = firsts(s, m), l = lasts(s, m);
  int p = k;
  for (int j = k; j <= m; ++j)
    if (f[j] < f[p]) p = j;
  for (int i = 1; i < k; ++i)
    if (f[i] > f[p]) return std::nullopt;
  for (int j = k; j < p; ++j)
    if (l[j] > l[p]) return std::nullopt;
  std::vector<Symbol> erased;
  for (Symbol v : s)
    if (v != p) erased.push_back(static_cast<Symbol>(v > p ? v - 1 : v));
  if (m > 1) {
    int kk = std::min(k, m - 1);
    if (!is_k_semicanonical(erased, m - 1, kk)) return std::nullopt;
  }
  int q = p;
  for (int j = 1; j <= m; ++j)
    if (l[j] <= l[p]) q = std::max(q, j);
  return KpqMatrix{s, m, k, p, q};
}

KpqMatrix phi(const KpqMatrix& a) {
  int p = a.p, m = a.m;
  if (p >= a.q) throw PreconditionError("phi needs p < q");
  if (contains(a.seq, SymbolSeq{1, 2, 1, 1, 2})) throw PreconditionError("matrix contains 12112");
  SparseMatrix sm = to_sparse(a.seq, m);
  auto [rear, sep] = rear_columns(sm.col, p);
  SymbolSeq out = from_sparse(pseudoswap(sm, p));
  if (rear.size() > 1) {
    Cols b = columns_of(sm.col, p), ys = columns_of(sm.col, p + 1);
    std::size_t i = std::find(b.begin(), b.end(), sep) - b.begin();
    int b_prev = i ? b[i - 1] : -1;
    Cols front;
    for (int c : ys)
      if (c < sep) front.push_back(c);
    require(!front.empty(), "phi: separated row has no front column");
    int d_penult = rear[rear.size() - 2];
    Cols y1 = y_columns(a.seq, m, p, d_penult, b_prev, front.front());
    Cols z = front;
    z.push_back(sep);
    z.insert(z.end(), rear.begin(), rear.end() - 2);
    out = regroup(out, z, y1);
  }
  KpqMatrix res{out, m, a.k, p + 1, a.q};
  require(!contains(out, SymbolSeq{1, 2, 1, 1, 2}), "phi: image contains 12112");
  return res;
}

KpqMatrix phi_inverse(const KpqMatrix& a) {
  int p = a.p - 1, m = a.m;
  if (p < a.k) throw PreconditionError("phi inverse needs p > k");
  if (contains(a.seq, SymbolSeq{1, 2, 1, 1, 2})) throw PreconditionError("matrix contains 12112");
  SparseMatrix sm = to_sparse(a.seq, m);
  Cols delta = columns_of(sm.col, p);
  Cols beta = middle_columns(sm.col, p);
  SymbolSeq cur = a.seq;
  if (beta.size() > 1) {
    std::size_t r = beta.size();
    Cols y1 = y_columns(a.seq, m, p, beta[r - 1], beta[r - 2], beta[r - 1]);
    Cols z(delta.begin(), delta.end() - 1);
    z.insert(z.end(), beta.begin(), beta.end() - 1);
    cur = regroup(cur, y1, z);
  }
  SymbolSeq out = from_sparse(pseudoswap_inverse(to_sparse(cur, m), p));
  require(!contains(out, SymbolSeq{1, 2, 1, 1, 2}), "phi inverse: image contains 12112");
  return KpqMatrix{out, m, a.k, p, a.q};
}

Partition bijection_12112_12212(const Partition& pi) {
  if (contains(pi.seq(), SymbolSeq{1, 2, 1, 1, 2})) throw PreconditionError("input contains 12112");
  int m = pi.blocks();
  SymbolSeq s = pi.seq();
  for (int k = m - 1; k >= 1; --k) {
    auto kpq = as_kpq(s, m, k);
    require(kpq && kpq->p == k, "semicanonical lift: not a (k,k,q)-matrix");
    while (kpq->p < kpq->q) kpq = phi(*kpq);
    s = kpq->seq;
  }
  SymbolSeq out = reverse_complement(s, m);
  require(validate_partition(out), "reverse complement is not canonical");
  require(!contains(out, SymbolSeq{1, 2, 2, 1, 2}), "output contains 12212");
  return Partition::from(out);
}

Partition bijection_12212_12112(const Partition& pi) {
  if (contains(pi.seq(), SymbolSeq{1, 2, 2, 1, 2})) throw PreconditionError("input contains 12212");
  int m = pi.blocks();
  SymbolSeq s = reverse_complement(pi.seq(), m);
  for (int k = 1; k <= m - 1; ++k) {
    auto kpq = as_kpq(s, m, k);
    require(kpq && kpq->p == kpq->q, "semicanonical descent: not a k-semicanonical matrix");
    while (kpq->p > k) kpq = phi_inverse(*kpq);
    s = kpq->seq;
  }
  require(validate_partition(s), "descent did not reach a canonical sequence");
  return Partition::from(s);
}

}  // namespace partpat
