#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "partpat/checked.hpp"
#include "partpat/seq.hpp"

namespace partpat {

enum class ShapeKind { Ferrers, Stack };

// Bottom-justified columns given by their heights, left to right. Rows are
// numbered from the bottom starting at 1.
class Shape {
 public:
  Shape() = default;
  static Shape ferrers(std::vector<int> heights);
  static Shape stack(std::vector<int> heights);
  static Shape parse(ShapeKind kind, const std::string& text);  // "2,4,4,4,4,4"

  ShapeKind kind() const { return kind_; }
  const std::vector<int>& heights() const { return h_; }
  int columns() const { return static_cast<int>(h_.size()); }
  int rows() const;
  int height(int col) const { return h_[col]; }  // 0-based column
  std::string str() const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  ShapeKind kind_ = ShapeKind::Ferrers;
  std::vector<int> h_;
};

// 0-1 filling with at most one 1 per column: cell[j] is the row of the 1 in
// column j (0-based column), 0 for an empty column.
struct Filling {
  Shape shape;
  std::vector<std::uint8_t> cell;

  Filling() = default;
  Filling(Shape s, std::vector<std::uint8_t> c);  // validates cells inside the shape

  bool semi_standard() const;
  int ones_in_row(int row) const;
  std::string dump() const;  // one line per column
  friend bool operator==(const Filling&, const Filling&) = default;
  friend auto operator<=>(const Filling& a, const Filling& b) { return a.cell <=> b.cell; }
};

struct Matrix01 {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<bool>> one;  // one[row-1][col-1], row 1 at the bottom

  Matrix01() = default;
  Matrix01(int r, int c) : rows(r), cols(c), one(r, std::vector<bool>(c, false)) {}
  bool at(int row, int col) const { return one[row - 1][col - 1]; }
  void set(int row, int col) { one[row - 1][col - 1] = true; }
  static Matrix01 identity(int k);       // I_k
  static Matrix01 anti_identity(int k);  // J_k
};

Matrix01 matrix_of(const SymbolSeq& s, int k);

bool filling_contains(const Filling& f, const Matrix01& m);

enum class FillMode { SemiStandard, Sparse };

void for_each_filling(const Shape& shape, FillMode mode, const std::function<void(const Filling&)>& fn);
count_t count_fillings(const Shape& shape, const Matrix01& avoid, FillMode mode = FillMode::SemiStandard);
// avoiders grouped by the number of 1-cells in each row
std::map<std::vector<int>, count_t> count_fillings_by_row_sums(const Shape& shape, const Matrix01& avoid,
                                                               FillMode mode = FillMode::SemiStandard);

// All weakly increasing height vectors with exactly `cols` entries and maximum `rows`.
std::vector<Shape> ferrers_shapes(int rows, int cols);
void for_each_ferrers_shape(int max_cols, int max_rows, const std::function<void(const Shape&)>& fn);
void for_each_stack_shape(int max_cols, int max_rows, const std::function<void(const Shape&)>& fn);

struct EquivResult {
  bool equivalent = true;
  std::optional<Shape> witness;
  count_t left = 0;
  count_t right = 0;
};

EquivResult ferrers_equiv_upto(const Matrix01& a, const Matrix01& b, int max_cols, int max_rows,
                               bool refine_rows = false);
EquivResult stack_equiv_upto(const Matrix01& a, const Matrix01& b, int max_cols, int max_rows,
                             bool refine_rows = false);

Filling filshift(const Filling& f);
Filling filshift_inverse(const Filling& f);

// Green-cell filling G- of a partition.
Filling partition_to_filling(const Partition& p);
// Checked form: p must avoid 12...k S.
Filling partition_to_filling(const Partition& p, const SymbolSeq& tail, int k);
Partition filling_to_partition(const Filling& f, int m);

bool is_t_falling(const Filling& f, int t);

struct OrderedGraph {
  struct Vertex {
    bool left;
    int index;  // 1-based row (left) or column (right)
  };
  std::vector<Vertex> order;
  std::vector<std::pair<int, int>> edges;  // positions in `order`, first < second, sorted
};

struct GraphPattern {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based vertex positions
  static GraphPattern g1();  // l l' r r' r'' with l r, l r', l' r''
  static GraphPattern g2();  // l l' r r' r'' with l r', l' r, l r''
};

OrderedGraph filling_to_ordered_graph(const Filling& f);
bool graph_contains(const OrderedGraph& g, const GraphPattern& pat);

}  // namespace partpat
