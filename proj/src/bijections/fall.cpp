#include <algorithm>

#include "partpat/bijections.hpp"
#include "partpat/error.hpp"

namespace partpat {

namespace {

using Cells = std::vector<std::uint8_t>;

// Contents of the top-row interval split at the 1-cells of the top row.
struct TopRow {
  std::vector<int> interval;        // column indices with height r
  std::vector<std::vector<std::uint8_t>> gaps;  // m + 1 gaps
};

TopRow split_top(const std::vector<int>& h, const Cells& c, int r) {
  TopRow t;
  t.gaps.emplace_back();
  for (std::size_t j = 0; j < h.size(); ++j) {
    if (h[j] != r) continue;
    t.interval.push_back(static_cast<int>(j));
    if (c[j] == r)
      t.gaps.emplace_back();
    else
      t.gaps.back().push_back(c[j]);
  }
  return t;
}

void rebuild(const TopRow& t, const std::vector<std::vector<std::uint8_t>>& gaps, int r, Cells& c) {
  std::vector<std::uint8_t> seq;
  for (std::size_t g = 0; g < gaps.size(); ++g) {
    if (g) seq.push_back(static_cast<std::uint8_t>(r));
    seq.insert(seq.end(), gaps[g].begin(), gaps[g].end());
  }
  for (std::size_t i = 0; i < t.interval.size(); ++i) c[t.interval[i]] = seq[i];
}

// Recurse on the shape without the top row and without the columns holding a
// top-row 1.
Cells recurse(const std::vector<int>& h, const Cells& c, int r, int p, int q, bool inverse);

Cells apply(const std::vector<int>& h, Cells c, int p, int q, bool inverse) {
  if (h.empty()) return c;
  int r = *std::max_element(h.begin(), h.end());
  if (r <= 1) return c;
  c = recurse(h, c, r, p, q, inverse);
  TopRow t = split_top(h, c, r);
  int m = static_cast<int>(t.gaps.size()) - 1;
  if (m < p + q) return c;
  std::vector<std::vector<std::uint8_t>> out(m + 1);
  if (!inverse) {
    for (int g = p; g <= m - q; ++g)
      if (!t.gaps[g].empty()) throw InvariantError("fall: condition (b) fails, filling contains M(2^p 1 2^q, 2)");
    for (int g = 0; g < p; ++g) out[g] = t.gaps[g];
    for (int i = 1; i <= q; ++i) out[p + i - 1] = t.gaps[m - q + i];
  } else {
    for (int g = p + q; g <= m; ++g)
      if (!t.gaps[g].empty()) throw InvariantError("fall inverse: filling contains M(2^(p+q) 1, 2)");
    for (int g = 0; g < p; ++g) out[g] = t.gaps[g];
    for (int i = 1; i <= q; ++i) out[m - q + i] = t.gaps[p + i - 1];
  }
  rebuild(t, out, r, c);
  return c;
}

Cells recurse(const std::vector<int>& h, const Cells& c, int r, int p, int q, bool inverse) {
  std::vector<int> idx, sh;
  Cells sc;
  for (std::size_t j = 0; j < h.size(); ++j)
    if (c[j] != r) {
      idx.push_back(static_cast<int>(j));
      sh.push_back(std::min(h[j], r - 1));
      sc.push_back(c[j]);
    }
  Cells done = apply(sh, sc, p, q, inverse);
  Cells out = c;
  for (std::size_t i = 0; i < idx.size(); ++i) out[idx[i]] = done[i];
  return out;
}

Matrix01 two_row(int a, int b, bool one_last) {
  SymbolSeq s = one_last ? repeat(2, a + b) + SymbolSeq{1} : repeat(2, a) + SymbolSeq{1} + repeat(2, b);
  return matrix_of(s, 2);
}

void check(const Filling& f, int p, int q) {
  if (p < 0 || q < 0) throw PreconditionError("fall: p, q must be nonnegative");
  if (!f.semi_standard()) throw PreconditionError("fall: filling must be semi-standard");
  (void)Shape::stack(f.shape.heights());
}

}  // namespace

Filling fall_bijection(const Filling& f, int p, int q) {
  check(f, p, q);
  if (filling_contains(f, two_row(p, q, false))) throw PreconditionError("fall: filling contains M(2^p 1 2^q, 2)");
  Filling out(f.shape, apply(f.shape.heights(), f.cell, p, q, false));
  if (filling_contains(out, two_row(p, q, true))) throw InvariantError("fall: image contains M(2^(p+q) 1, 2)");
  return out;
}

Filling fall_inverse(const Filling& f, int p, int q) {
  check(f, p, q);
  if (filling_contains(f, two_row(p, q, true))) throw PreconditionError("fall inverse: filling contains M(2^(p+q) 1, 2)");
  Filling out(f.shape, apply(f.shape.heights(), f.cell, p, q, true));
  if (filling_contains(out, two_row(p, q, false))) throw InvariantError("fall inverse: image contains M(2^p 1 2^q, 2)");
  return out;
}

}  // namespace partpat
