#include "drtest/weight_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace drtest {

std::vector<Rational> WeightEntry::sorted() const {
  auto out = values;
  std::sort(out.begin(), out.end());
  return out;
}

WeightMatrix::WeightMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), cells_(rows * cols) {}

WeightMatrix WeightMatrix::from_values(
    const std::vector<std::vector<std::vector<Rational>>>& cells) {
  const std::size_t rows = cells.size();
  const std::size_t cols = rows == 0 ? 0 : cells[0].size();
  WeightMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (cells[i].size() != cols) {
      throw std::invalid_argument("from_values: ragged rows");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      m.at(i, j).values = cells[i][j];
    }
  }
  return m;
}

WeightMatrix WeightMatrix::block(std::size_t r0, std::size_t r1, std::size_t c0,
                                 std::size_t c1) const {
  if (r0 > r1 || r1 > rows_ || c0 > c1 || c1 > cols_) {
    throw std::out_of_range("block outside the matrix");
  }
  WeightMatrix out(r1 - r0, c1 - c0);
  for (std::size_t i = r0; i < r1; ++i) {
    for (std::size_t j = c0; j < c1; ++j) {
      out.at(i - r0, j - c0) = at(i, j);
    }
  }
  return out;
}

Rational weight(const Word& w, const RationalVector& v) {
  Rational total;
  for (const auto& l : w) {
    if (l.generator >= v.size()) {
      throw std::invalid_argument("weight: word uses a generator outside the vector's dimension");
    }
    if (l.sign > 0) {
      total += v[l.generator];
    } else {
      total -= v[l.generator];
    }
  }
  return total;
}

bool orthogonal_to_relators(const Presentation& p, const RationalVector& v) {
  if (v.size() != p.generator_count()) {
    return false;
  }
  return std::all_of(p.relators.begin(), p.relators.end(),
                     [&](const Word& r) { return weight(r, v) == 0; });
}

WeightMatrix weight_matrix(const Presentation& p, const RationalVector& v) {
  if (v.size() != p.generator_count()) {
    throw std::invalid_argument("weight_matrix: vector has dimension " + std::to_string(v.size()) +
                                ", presentation has " + std::to_string(p.generator_count()) +
                                " generators");
  }
  WeightMatrix m(p.generator_count(), p.relator_count());
  for (std::size_t j = 0; j < p.relator_count(); ++j) {
    const Word& r = p.relators[j];
    if (weight(r, v) != 0) {
      throw std::invalid_argument("weight_matrix: vector is not orthogonal to relator " +
                                  std::to_string(j + 1));
    }
    // Suffix weights from the right: tails[k] = weight of w^(k+1), 0-based.
    std::vector<Rational> tails(r.size() + 1);
    for (std::size_t k = r.size(); k-- > 0;) {
      tails[k] = tails[k + 1] + (r[k].sign > 0 ? v[r[k].generator] : Rational(-v[r[k].generator]));
    }
    for (std::size_t k = 0; k < r.size(); ++k) {
      auto& cell = m.at(r[k].generator, j);
      cell.values.push_back(r[k].sign > 0 ? tails[k] : tails[k + 1]);
      cell.positions.push_back(k + 1);
    }
  }
  return m;
}

namespace {

std::optional<Rational> row_max(const WeightMatrix& m, std::size_t i) {
  std::optional<Rational> best;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (const auto& x : m.at(i, j).values) {
      if (!best || x > *best) {
        best = x;
      }
    }
  }
  return best;
}

}  // namespace

std::optional<GoodnessWitness> is_good(const WeightMatrix& m) {
  const std::size_t n = m.rows();
  const std::size_t cols = m.cols();
  if (n < cols) {
    return std::nullopt;
  }
  std::vector<std::optional<Rational>> maxima(n);
  for (std::size_t i = 0; i < n; ++i) {
    maxima[i] = row_max(m, i);
  }
  // count[i] = occurrences of the row maximum among remaining columns.
  std::vector<std::size_t> count(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cols && maxima[i]; ++j) {
      const auto& vals = m.at(i, j).values;
      count[i] += static_cast<std::size_t>(std::count(vals.begin(), vals.end(), *maxima[i]));
    }
  }
  std::vector<bool> row_used(n, false);
  std::vector<bool> col_left(cols, true);
  GoodnessWitness w;
  for (std::size_t step = 0; step < cols; ++step) {
    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i) {
      if (row_used[i] || !maxima[i] || count[i] != 1) {
        continue;
      }
      for (std::size_t j = 0; j < cols && !found; ++j) {
        if (!col_left[j]) {
          continue;
        }
        const auto& vals = m.at(i, j).values;
        auto it = std::find(vals.begin(), vals.end(), *maxima[i]);
        if (it == vals.end()) {
          continue;
        }
        found = true;
        row_used[i] = true;
        col_left[j] = false;
        w.column_order.push_back(j);
        w.row_order.push_back(i);
        w.pivots.push_back({i, j, static_cast<std::size_t>(it - vals.begin()), *maxima[i]});
        for (std::size_t r = 0; r < n; ++r) {
          if (maxima[r]) {
            const auto& cv = m.at(r, j).values;
            count[r] -= static_cast<std::size_t>(std::count(cv.begin(), cv.end(), *maxima[r]));
          }
        }
      }
    }
    if (!found) {
      return std::nullopt;
    }
  }
  return w;
}

std::optional<GoodnessWitness> goodness_for_orders(const WeightMatrix& m,
                                                   const std::vector<std::size_t>& cols,
                                                   const std::vector<std::size_t>& rows) {
  if (cols.size() != m.cols() || rows.size() != cols.size()) {
    throw std::invalid_argument("goodness_for_orders: need one column and one row per column");
  }
  std::vector<bool> col_seen(m.cols(), false);
  std::vector<bool> row_seen(m.rows(), false);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (cols[k] >= m.cols() || rows[k] >= m.rows() || col_seen[cols[k]] || row_seen[rows[k]]) {
      throw std::invalid_argument("goodness_for_orders: orders must be a permutation and an injection");
    }
    col_seen[cols[k]] = true;
    row_seen[rows[k]] = true;
  }
  GoodnessWitness w{cols, rows, {}};
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const auto& cell = m.at(rows[k], cols[k]).values;
    if (cell.empty()) {
      return std::nullopt;
    }
    auto top = std::max_element(cell.begin(), cell.end());
    auto whole = row_max(m, rows[k]);
    if (*top != *whole) {
      return std::nullopt;
    }
    std::size_t mult = 0;
    for (std::size_t l = k; l < cols.size(); ++l) {
      const auto& vals = m.at(rows[k], cols[l]).values;
      mult += static_cast<std::size_t>(std::count(vals.begin(), vals.end(), *top));
    }
    if (mult != 1) {
      return std::nullopt;
    }
    w.pivots.push_back({rows[k], cols[k], static_cast<std::size_t>(top - cell.begin()), *top});
  }
  return w;
}

namespace {

// Conditions at step k only involve row k and the columns from k on, so a
// bad prefix can be cut immediately.
bool step_ok(const WeightMatrix& m, const std::vector<std::size_t>& cols, std::size_t k,
             std::size_t row) {
  const auto& cell = m.at(row, cols[k]).values;
  if (cell.empty()) {
    return false;
  }
  Rational top = *std::max_element(cell.begin(), cell.end());
  if (top != *row_max(m, row)) {
    return false;
  }
  std::size_t mult = 0;
  for (std::size_t l = k; l < cols.size(); ++l) {
    const auto& vals = m.at(row, cols[l]).values;
    mult += static_cast<std::size_t>(std::count(vals.begin(), vals.end(), top));
  }
  return mult == 1;
}

bool search_rows(const WeightMatrix& m, const std::vector<std::size_t>& cols,
                 std::vector<std::size_t>& rows, std::vector<bool>& used,
                 std::optional<GoodnessWitness>& out) {
  if (rows.size() == cols.size()) {
    out = goodness_for_orders(m, cols, rows);
    return out.has_value();
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (used[i] || !step_ok(m, cols, rows.size(), i)) {
      continue;
    }
    used[i] = true;
    rows.push_back(i);
    bool done = search_rows(m, cols, rows, used, out);
    rows.pop_back();
    used[i] = false;
    if (done) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<GoodnessWitness> is_good_exhaustive(const WeightMatrix& m, std::size_t cap) {
  if (m.cols() > cap) {
    throw std::invalid_argument("is_good_exhaustive: " + std::to_string(m.cols()) +
                                " columns exceed the cap of " + std::to_string(cap));
  }
  if (m.rows() < m.cols()) {
    return std::nullopt;
  }
  std::vector<std::size_t> cols(m.cols());
  std::iota(cols.begin(), cols.end(), 0);
  do {
    std::vector<std::size_t> rows;
    std::vector<bool> used(m.rows(), false);
    std::optional<GoodnessWitness> out;
    if (search_rows(m, cols, rows, used, out)) {
      return out;
    }
  } while (std::next_permutation(cols.begin(), cols.end()));
  return std::nullopt;
}

}  // namespace drtest
