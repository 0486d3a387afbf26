#include "partpat/fillings.hpp"

#include <algorithm>
#include <sstream>

#include "partpat/containment.hpp"
#include "partpat/error.hpp"

namespace partpat {

namespace {

bool unimodal(const std::vector<int>& h) {
  std::size_t i = 0;
  while (i + 1 < h.size() && h[i] <= h[i + 1]) ++i;
  while (i + 1 < h.size() && h[i] >= h[i + 1]) ++i;
  return i + 1 >= h.size();
}

void check_heights(const std::vector<int>& h) {
  for (int x : h)
    if (x < 1 || x > 255) throw PreconditionError("column heights must be in 1..255");
}

}  // namespace

Shape Shape::ferrers(std::vector<int> heights) {
  check_heights(heights);
  if (!std::is_sorted(heights.begin(), heights.end()))
    throw PreconditionError("Ferrers shape needs weakly increasing heights");
  Shape s;
  s.kind_ = ShapeKind::Ferrers;
  s.h_ = std::move(heights);
  return s;
}

Shape Shape::stack(std::vector<int> heights) {
  check_heights(heights);
  if (!unimodal(heights)) throw PreconditionError("stack polyomino needs unimodal heights");
  Shape s;
  s.kind_ = ShapeKind::Stack;
  s.h_ = std::move(heights);
  return s;
}

Shape Shape::parse(ShapeKind kind, const std::string& text) {
  std::vector<int> h;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw ParseError("");
      h.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad shape literal \"" + text + "\"");
    }
  }
  try {
    return kind == ShapeKind::Ferrers ? ferrers(h) : stack(h);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

int Shape::rows() const { return h_.empty() ? 0 : *std::max_element(h_.begin(), h_.end()); }

std::string Shape::str() const {
  std::string out;
  for (std::size_t i = 0; i < h_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(h_[i]);
  }
  return out;
}

Filling::Filling(Shape s, std::vector<std::uint8_t> c) : shape(std::move(s)), cell(std::move(c)) {
  if (static_cast<int>(cell.size()) != shape.columns()) throw PreconditionError("filling width differs from shape");
  for (int j = 0; j < shape.columns(); ++j)
    if (cell[j] > shape.height(j)) throw PreconditionError("1-cell outside the shape");
}

bool Filling::semi_standard() const {
  return std::all_of(cell.begin(), cell.end(), [](std::uint8_t r) { return r != 0; });
}

int Filling::ones_in_row(int row) const { return static_cast<int>(std::count(cell.begin(), cell.end(), row)); }

std::string Filling::dump() const {
  std::string out;
  for (auto r : cell) out += std::to_string(r) + "\n";
  return out;
}

Matrix01 Matrix01::identity(int k) {
  Matrix01 m(k, k);
  for (int i = 1; i <= k; ++i) m.set(i, i);
  return m;
}

Matrix01 Matrix01::anti_identity(int k) {
  Matrix01 m(k, k);
  for (int i = 1; i <= k; ++i) m.set(i, k + 1 - i);
  return m;
}

Matrix01 matrix_of(const SymbolSeq& s, int k) {
  if (k < s.max()) throw PreconditionError("matrix_of: k below the largest symbol");
  Matrix01 m(k, static_cast<int>(s.size()));
  for (std::size_t j = 0; j < s.size(); ++j) m.set(s[j], static_cast<int>(j) + 1);
  return m;
}

namespace {

// Containment search over raw columns [0, ncols). When force_last is set the
// last pattern column must use column ncols-1.
struct FillSearch {
  const std::vector<int>& h;
  const std::uint8_t* cell;
  int ncols;
  const Matrix01& m;
  std::vector<int> col_one;  // row of the 1 in pattern column b, 0 none, -1 several
  std::vector<int> rowmap;   // pattern row -> host row, 0 unassigned
  bool force_last;

  FillSearch(const std::vector<int>& heights, const std::uint8_t* c, int n, const Matrix01& pat, bool last)
      : h(heights), cell(c), ncols(n), m(pat), col_one(pat.cols, 0), rowmap(pat.rows + 1, 0), force_last(last) {
    for (int b = 1; b <= m.cols; ++b)
      for (int a = 1; a <= m.rows; ++a)
        if (m.at(a, b)) col_one[b - 1] = col_one[b - 1] == 0 ? a : -1;
  }

  bool rows_fit(int cap) const {
    int r = m.rows;
    bool any = false;
    for (int a = 1; a <= r; ++a)
      if (rowmap[a]) {
        any = true;
        if (rowmap[a] + (r - a) > cap) return false;
      }
    return any || r <= cap;
  }

  bool assign_ok(int a, int i) const {
    if (rowmap[a]) return rowmap[a] == i;
    if (i < a) return false;
    for (int a2 = 1; a2 <= m.rows; ++a2) {
      if (!rowmap[a2]) continue;
      if (a2 < a && rowmap[a2] + (a - a2) > i) return false;
      if (a2 > a && i + (a2 - a) > rowmap[a2]) return false;
    }
    return true;
  }

  bool run(int b, int from, int cap) {
    if (b == m.cols) return true;
    int remaining = m.cols - b;
    int lo = from;
    if (force_last && b == m.cols - 1) lo = std::max(from, ncols - 1);
    for (int j = lo; j + remaining <= ncols; ++j) {
      if (force_last && b < m.cols - 1 && j >= ncols - 1) break;
      int ncap = std::min(cap, h[j]);
      int a = col_one[b];
      if (a < 0) return false;
      if (a > 0) {
        int i = cell[j];
        if (i == 0 || !assign_ok(a, i)) continue;
        bool fresh = rowmap[a] == 0;
        rowmap[a] = i;
        if (rows_fit(ncap) && run(b + 1, j + 1, ncap)) {
          if (fresh) rowmap[a] = 0;
          return true;
        }
        if (fresh) rowmap[a] = 0;
      } else {
        if (rows_fit(ncap) && run(b + 1, j + 1, ncap)) return true;
      }
    }
    return false;
  }
};

bool contains_raw(const std::vector<int>& h, const std::uint8_t* cell, int ncols, const Matrix01& m, bool force_last) {
  if (m.cols == 0) {
    if (force_last) return false;
    int cap = 0;
    for (int j = 0; j < ncols; ++j) cap = std::max(cap, h[j]);
    return m.rows <= cap || m.rows == 0;
  }
  if (m.cols > ncols) return false;
  FillSearch s(h, cell, ncols, m, force_last);
  return s.run(0, 0, 1 << 20);
}

template <class Fn>
void walk(const Shape& shape, FillMode mode, const Matrix01* avoid, Fn&& leaf) {
  const auto& h = shape.heights();
  int n = shape.columns();
  std::vector<std::uint8_t> cell(n, 0);
  std::function<void(int)> rec = [&](int j) {
    if (j == n) {
      leaf(cell);
      return;
    }
    for (int r = (mode == FillMode::Sparse ? 0 : 1); r <= h[j]; ++r) {
      cell[j] = static_cast<std::uint8_t>(r);
      if (avoid && contains_raw(h, cell.data(), j + 1, *avoid, true)) continue;
      rec(j + 1);
    }
  };
  if (avoid && avoid->cols == 0) {
    if (contains_raw(h, cell.data(), n, *avoid, false)) return;
  }
  rec(0);
}

}  // namespace

bool filling_contains(const Filling& f, const Matrix01& m) {
  return contains_raw(f.shape.heights(), f.cell.data(), f.shape.columns(), m, false);
}

void for_each_filling(const Shape& shape, FillMode mode, const std::function<void(const Filling&)>& fn) {
  walk(shape, mode, nullptr, [&](const std::vector<std::uint8_t>& c) { fn(Filling(shape, c)); });
}

count_t count_fillings(const Shape& shape, const Matrix01& avoid, FillMode mode) {
  count_t total = 0;
  walk(shape, mode, &avoid, [&](const std::vector<std::uint8_t>&) { total = add_checked(total, 1); });
  return total;
}

std::map<std::vector<int>, count_t> count_fillings_by_row_sums(const Shape& shape, const Matrix01& avoid,
                                                               FillMode mode) {
  std::map<std::vector<int>, count_t> out;
  int r = shape.rows();
  walk(shape, mode, &avoid, [&](const std::vector<std::uint8_t>& c) {
    std::vector<int> sums(r, 0);
    for (auto x : c)
      if (x) ++sums[x - 1];
    ++out[sums];
  });
  return out;
}

std::vector<Shape> ferrers_shapes(int rows, int cols) {
  std::vector<Shape> out;
  if (cols == 0) {
    if (rows == 0) out.push_back(Shape::ferrers({}));
    return out;
  }
  std::vector<int> h(cols, 1);
  std::function<void(int, int)> rec = [&](int j, int lo) {
    if (j == cols) {
      if (h.back() == rows) out.push_back(Shape::ferrers(h));
      return;
    }
    for (int v = lo; v <= rows; ++v) {
      h[j] = v;
      rec(j + 1, v);
    }
  };
  rec(0, 1);
  return out;
}

void for_each_ferrers_shape(int max_cols, int max_rows, const std::function<void(const Shape&)>& fn) {
  fn(Shape::ferrers({}));
  for (int c = 1; c <= max_cols; ++c)
    for (int r = 1; r <= max_rows; ++r)
      for (const Shape& s : ferrers_shapes(r, c)) fn(s);
}

void for_each_stack_shape(int max_cols, int max_rows, const std::function<void(const Shape&)>& fn) {
  fn(Shape::stack({}));
  for (int c = 1; c <= max_cols; ++c) {
    std::vector<int> h(c, 1);
    while (true) {
      if (unimodal(h)) fn(Shape::stack(h));
      int j = c - 1;
      while (j >= 0 && h[j] == max_rows) h[j--] = 1;
      if (j < 0) break;
      ++h[j];
    }
  }
}

namespace {

EquivResult equiv(const Matrix01& a, const Matrix01& b, bool refine,
                  const std::function<void(const std::function<void(const Shape&)>&)>& shapes) {
  EquivResult res;
  shapes([&](const Shape& s) {
    if (!res.equivalent) return;
    bool same;
    count_t ca = count_fillings(s, a), cb = count_fillings(s, b);
    same = ca == cb;
    if (same && refine) same = count_fillings_by_row_sums(s, a) == count_fillings_by_row_sums(s, b);
    if (!same) {
      res.equivalent = false;
      res.witness = s;
      res.left = ca;
      res.right = cb;
    }
  });
  return res;
}

}  // namespace

EquivResult ferrers_equiv_upto(const Matrix01& a, const Matrix01& b, int max_cols, int max_rows, bool refine_rows) {
  return equiv(a, b, refine_rows, [&](const auto& fn) { for_each_ferrers_shape(max_cols, max_rows, fn); });
}

EquivResult stack_equiv_upto(const Matrix01& a, const Matrix01& b, int max_cols, int max_rows, bool refine_rows) {
  return equiv(a, b, refine_rows, [&](const auto& fn) { for_each_stack_shape(max_cols, max_rows, fn); });
}

Filling filshift(const Filling& f) {
  if (!unimodal(f.shape.heights()))
    throw PreconditionError("filshift needs a stack polyomino");
  Filling g = f;
  for (int j = 0; j < f.shape.columns(); ++j) {
    int r = f.cell[j];
    if (r == 0) continue;  // zero columns stay frozen
    g.cell[j] = static_cast<std::uint8_t>(r < f.shape.height(j) ? r + 1 : 1);
  }
  return g;
}

Filling filshift_inverse(const Filling& f) {
  Filling g = f;
  for (int j = 0; j < f.shape.columns(); ++j) {
    int r = f.cell[j];
    if (r == 0) continue;
    g.cell[j] = static_cast<std::uint8_t>(r > 1 ? r - 1 : f.shape.height(j));
  }
  return g;
}

Filling partition_to_filling(const Partition& p) {
  std::vector<int> h;
  std::vector<std::uint8_t> c;
  int mx = 0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    int v = p[j];
    if (v <= mx) {
      h.push_back(mx);
      c.push_back(static_cast<std::uint8_t>(v));
    }
    mx = std::max(mx, v);
  }
  return Filling(Shape::ferrers(h), c);
}

Filling partition_to_filling(const Partition& p, const SymbolSeq& tail, int k) {
  if (tail.max() > k) throw PreconditionError("pattern tail must be over [k]");
  std::vector<Symbol> pat;
  for (int i = 1; i <= k; ++i) pat.push_back(static_cast<Symbol>(i));
  pat.insert(pat.end(), tail.begin(), tail.end());
  if (contains(p.seq().view(), std::span<const Symbol>(pat))) throw PreconditionError("partition contains 12...kS");
  return partition_to_filling(p);
}

Partition filling_to_partition(const Filling& f, int m) {
  const auto& h = f.shape.heights();
  if (!std::is_sorted(h.begin(), h.end())) throw PreconditionError("filling_to_partition needs a Ferrers shape");
  if (!f.semi_standard()) throw PreconditionError("filling_to_partition needs a semi-standard filling");
  if (f.shape.rows() > m) throw PreconditionError("filling has more than m rows");
  if (m < 1) {
    if (f.shape.columns()) throw PreconditionError("m = 0 needs the empty filling");
    return Partition();
  }
  // (height, symbol) with symbol = row for original columns, block index for red ones
  struct Col {
    int height;
    int symbol;
  };
  std::vector<Col> cols;
  for (int j = 0; j < f.shape.columns(); ++j) cols.push_back({h[j], f.cell[j]});
  for (int i = 2; i <= m; ++i) {
    std::size_t at = 0;
    for (std::size_t t = 0; t < cols.size(); ++t)
      if (cols[t].height <= i - 1) at = t + 1;
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(at), Col{i - 1, i});
  }
  std::vector<Symbol> s{1};
  for (const Col& c : cols) s.push_back(static_cast<Symbol>(c.symbol));
  if (!validate_partition(s)) throw InvariantError("filling_to_partition: red cells do not give a canonical sequence");
  return Partition::from(SymbolSeq(std::move(s)));
}

bool is_t_falling(const Filling& f, int t) {
  if (t > f.shape.rows()) return false;
  int prev = f.shape.columns();
  for (int row = 1; row <= t; ++row) {
    int lead = -1;
    for (int j = 0; j < f.shape.columns(); ++j)
      if (f.cell[j] == row) {
        lead = j;
        break;
      }
    if (lead < 0 || lead >= prev) return false;
    prev = lead;
  }
  return true;
}

GraphPattern GraphPattern::g1() { return {5, {{0, 2}, {0, 3}, {1, 4}}}; }
GraphPattern GraphPattern::g2() { return {5, {{0, 3}, {1, 2}, {1, 4}}}; }

OrderedGraph filling_to_ordered_graph(const Filling& f) {
  const auto& h = f.shape.heights();
  if (!std::is_sorted(h.begin(), h.end())) throw PreconditionError("ordered graphs need a Ferrers shape");
  OrderedGraph g;
  std::vector<int> lpos(f.shape.rows() + 1), rpos(f.shape.columns());
  int emitted = 0;
  for (int i = 0; i < f.shape.columns(); ++i) {
    while (emitted < h[i]) {
      ++emitted;
      lpos[emitted] = static_cast<int>(g.order.size());
      g.order.push_back({true, emitted});
    }
    rpos[i] = static_cast<int>(g.order.size());
    g.order.push_back({false, i + 1});
  }
  for (int i = 0; i < f.shape.columns(); ++i)
    if (f.cell[i]) g.edges.emplace_back(lpos[f.cell[i]], rpos[i]);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

bool graph_contains(const OrderedGraph& g, const GraphPattern& pat) {
  int n = static_cast<int>(g.order.size());
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [a, b] : g.edges) adj[a][b] = adj[b][a] = true;
  std::vector<int> map(pat.vertices);
  std::function<bool(int, int)> rec = [&](int v, int from) {
    if (v == pat.vertices) return true;
    for (int x = from; x + (pat.vertices - v) <= n; ++x) {
      map[v] = x;
      bool ok = true;
      for (auto [a, b] : pat.edges)
        if (std::max(a, b) == v && !adj[map[a]][map[b]]) ok = false;
      if (ok && rec(v + 1, x + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

}  // namespace partpat
