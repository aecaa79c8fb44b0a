#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "drtest/presentation.hpp"
#include "drtest/rational.hpp"

namespace drtest {

/// The weights of one cell, in occurrence order, with the 1-based letter
/// positions they came from (positions may be left empty for synthetic
/// matrices).
struct WeightEntry {
  std::vector<Rational> values;
  std::vector<std::size_t> positions;

  bool empty() const { return values.empty(); }
  std::size_t size() const { return values.size(); }
  /// Values sorted ascending.
  std::vector<Rational> sorted() const;
};

class WeightMatrix {
 public:
  WeightMatrix() = default;
  WeightMatrix(std::size_t rows, std::size_t cols);
  /// From raw values, cell (i, j) = cells[i][j].
  static WeightMatrix from_values(const std::vector<std::vector<std::vector<Rational>>>& cells);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const WeightEntry& at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
  WeightEntry& at(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }

  /// Rows [r0, r1) and columns [c0, c1).
  WeightMatrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<WeightEntry> cells_;
};

/// <q(w), v>. Throws std::invalid_argument if w uses a generator >= dim v.
Rational weight(const Word& w, const RationalVector& v);

/// True when v has the right dimension and <q(r), v> = 0 for every relator.
bool orthogonal_to_relators(const Presentation& p, const RationalVector& v);

/// Cell (i, j) holds the weights of s(k, r_j) for k in occ(x_i, r_j).
/// Throws std::invalid_argument on a dimension mismatch or when v is not
/// orthogonal to every relator.
WeightMatrix weight_matrix(const Presentation& p, const RationalVector& v);

struct Pivot {
  std::size_t row = 0;
  std::size_t col = 0;
  std::size_t occurrence = 0;  // index into the cell's values
  Rational value;
};

/// Orders are 0-based here and 1-based in reports.
struct GoodnessWitness {
  std::vector<std::size_t> column_order;
  std::vector<std::size_t> row_order;
  std::vector<Pivot> pivots;
};

/// Greedy: take any unused row whose maximum sits in a remaining column with
/// multiplicity one among the remaining columns. Choices only shrink the
/// competing multisets, so a failure here is a failure for every ordering.
std::optional<GoodnessWitness> is_good(const WeightMatrix& m);

/// The conditions checked for the given orders; the witness when they hold.
/// Throws std::invalid_argument unless `cols` is a column permutation and
/// `rows` an injection of the same length.
std::optional<GoodnessWitness> goodness_for_orders(const WeightMatrix& m,
                                                   const std::vector<std::size_t>& cols,
                                                   const std::vector<std::size_t>& rows);

/// Tries every column permutation and row injection. Throws
/// std::invalid_argument when the column count exceeds `cap`.
std::optional<GoodnessWitness> is_good_exhaustive(const WeightMatrix& m, std::size_t cap = 6);

}  // namespace drtest
