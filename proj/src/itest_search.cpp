#include <algorithm>
#include <set>
#include <stdexcept>

#include "drtest/itest.hpp"
#include "drtest/linear.hpp"

namespace drtest {

namespace {

struct Occurrence {
  std::size_t col = 0;
  RationalVector coeffs;  // weight as a linear form in the basis coordinates
};

class BudgetExceeded {};

// Solves the square system a x = b exactly; a is assumed invertible.
RationalVector solve(std::vector<RationalVector> a, RationalVector b) {
  const std::size_t d = b.size();
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) {
      ++p;
    }
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = 0; i < d; ++i) {
      if (i == c || a[i][c] == 0) {
        continue;
      }
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < d; ++j) {
        a[i][j] -= f * a[c][j];
      }
      b[i] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    b[i] /= a[i][i];
  }
  return b;
}

RationalVector combine(const std::vector<RationalVector>& basis, const RationalVector& lambda,
                       std::size_t n) {
  RationalVector v(n);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (lambda[b] == 0) {
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      v[i] += lambda[b] * basis[b][i];
    }
  }
  return v;
}

// Orthogonal projection of (1,...,1) onto span(basis).
RationalVector project_ones(const std::vector<RationalVector>& basis, std::size_t n) {
  const std::size_t d = basis.size();
  std::vector<RationalVector> gram(d, RationalVector(d));
  RationalVector rhs(d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      gram[a][b] = dot(basis[a], basis[b]);
    }
    for (const auto& x : basis[a]) {
      rhs[a] += x;
    }
  }
  return combine(basis, solve(gram, rhs), n);
}

class Searcher {
 public:
  Searcher(const Presentation& p, std::vector<RationalVector> basis, const Submatrix& range,
           const SearchOptions& options, SearchStats& stats)
      : p_(p), basis_(std::move(basis)), range_(range), options_(options), stats_(stats) {
    const std::size_t n = p.generator_count();
    const std::size_t d = basis_.size();
    rows_.assign(n, {});
    for (std::size_t j = range.c0; j < range.c1; ++j) {
      const Word& r = p.relators[j];
      std::vector<RationalVector> tails(r.size() + 1, RationalVector(d));
      for (std::size_t k = r.size(); k-- > 0;) {
        tails[k] = tails[k + 1];
        for (std::size_t b = 0; b < d; ++b) {
          const Rational& x = basis_[b][r[k].generator];
          tails[k][b] += r[k].sign > 0 ? x : Rational(-x);
        }
      }
      for (std::size_t k = 0; k < r.size(); ++k) {
        std::size_t g = r[k].generator;
        if (g >= range.r0 && g < range.r1) {
          rows_[g].push_back({j, r[k].sign > 0 ? tails[k] : tails[k + 1]});
        }
      }
    }
    viable_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t o = 0; o < rows_[i].size(); ++o) {
        viable_[i].push_back(quick_viable(i, o));
      }
    }
  }

  /// The coordinates of a witness, or nullopt when every sequence fails.
  std::optional<RationalVector> run() {
    LinearSystem sys(basis_.size());
    std::vector<bool> row_used(p_.generator_count(), false);
    std::vector<bool> col_left(p_.relator_count(), true);
    return dfs(sys, row_used, col_left, 0);
  }

 private:
  FeasibilityResult lp(const LinearSystem& sys) {
    if (stats_.lp_calls >= options_.lp_budget) {
      throw BudgetExceeded{};
    }
    ++stats_.lp_calls;
    return feasible(sys);
  }

  // The pivot must at least dominate its row, strictly inside its own cell.
  bool quick_viable(std::size_t i, std::size_t o) {
    LinearSystem sys(basis_.size());
    const auto& pivot = rows_[i][o];
    for (std::size_t q = 0; q < rows_[i].size(); ++q) {
      if (q == o) {
        continue;
      }
      bool strict = rows_[i][q].col == pivot.col;
      if (!add_difference(sys, pivot.coeffs, rows_[i][q].coeffs, strict)) {
        return false;
      }
    }
    return sys.constraints.empty() || lp(sys).is_feasible();
  }

  // Adds (a - b).lambda >= 1 (strict) or >= 0. Returns false when the
  // constraint is a strict one between identical forms.
  static bool add_difference(LinearSystem& sys, const RationalVector& a, const RationalVector& b,
                             bool strict) {
    RationalVector diff(a.size());
    for (std::size_t t = 0; t < a.size(); ++t) {
      diff[t] = a[t] - b[t];
    }
    if (is_zero(diff)) {
      return !strict;
    }
    sys.add(std::move(diff), Relation::Ge, strict ? 1 : 0);
    return true;
  }

  std::optional<RationalVector> dfs(const LinearSystem& sys, std::vector<bool>& row_used,
                                    std::vector<bool>& col_left, std::size_t depth) {
    ++stats_.nodes;
    const std::size_t target = range_.c1 - range_.c0;
    if (depth == target) {
      auto result = sys.constraints.empty() ? FeasibilityResult{RationalVector(basis_.size()), {}}
                                            : lp(sys);
      return result.witness;
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (row_used[i]) {
        continue;
      }
      for (std::size_t o = 0; o < rows_[i].size(); ++o) {
        const auto& pivot = rows_[i][o];
        if (!viable_[i][o] || !col_left[pivot.col]) {
          continue;
        }
        LinearSystem next = sys;
        bool ok = true;
        for (std::size_t q = 0; q < rows_[i].size() && ok; ++q) {
          if (q != o) {
            ok = add_difference(next, pivot.coeffs, rows_[i][q].coeffs, col_left[rows_[i][q].col]);
          }
        }
        if (!ok) {
          continue;
        }
        if (depth + 1 < target && !next.constraints.empty() &&
            !lp(next).is_feasible()) {
          continue;
        }
        row_used[i] = true;
        col_left[pivot.col] = false;
        auto found = dfs(next, row_used, col_left, depth + 1);
        row_used[i] = false;
        col_left[pivot.col] = true;
        if (found) {
          return found;
        }
      }
    }
    return std::nullopt;
  }

  const Presentation& p_;
  std::vector<RationalVector> basis_;
  Submatrix range_;
  const SearchOptions& options_;
  SearchStats& stats_;
  std::vector<std::vector<Occurrence>> rows_;
  std::vector<std::vector<bool>> viable_;
};

std::vector<RationalVector> candidate_vectors(const std::vector<RationalVector>& basis,
                                              std::size_t n, const SearchOptions& options) {
  std::vector<RationalVector> out;
  std::set<RationalVector> seen;
  auto push = [&](RationalVector v) {
    if (is_zero(v) || out.size() >= options.heuristic_cap) {
      return;
    }
    v = primitive(v);
    if (seen.insert(v).second) {
      out.push_back(std::move(v));
    }
  };
  for (const auto& b : basis) {
    push(b);
    RationalVector neg = b;
    for (auto& x : neg) {
      x = -x;
    }
    push(neg);
  }
  auto ones = project_ones(basis, n);
  push(ones);
  for (auto& x : ones) {
    x = -x;
  }
  push(ones);
  const int c = options.coefficient_bound;
  const std::size_t d = basis.size();
  std::vector<int> coeff(d, -c);
  while (out.size() < options.heuristic_cap && c > 0) {
    RationalVector lambda(coeff.begin(), coeff.end());
    push(combine(basis, lambda, n));
    std::size_t t = 0;
    while (t < d && coeff[t] == c) {
      coeff[t] = -c;
      ++t;
    }
    if (t == d) {
      break;
    }
    ++coeff[t];
  }
  return out;
}

}  // namespace

SubmatrixSearch search_submatrix(const Presentation& p, const Submatrix& range,
                                 const SearchOptions& options, SearchStats& stats) {
  const std::size_t n = p.generator_count();
  if (range.r0 > range.r1 || range.r1 > n || range.c0 > range.c1 ||
      range.c1 > p.relator_count()) {
    throw std::invalid_argument("search_submatrix: range outside the presentation");
  }
  SubmatrixSearch out;
  std::vector<ExponentVector> rows;
  for (const auto& r : p.relators) {
    rows.push_back(abelianize(r, n));
  }
  auto basis = null_space(rows, n);
  if (basis.empty() || range.r1 - range.r0 < range.c1 - range.c0) {
    out.reason = InconclusiveReason::Exhausted;
    return out;
  }
  auto good_for = [&](const RationalVector& v) {
    return is_good(weight_matrix(p, v).block(range.r0, range.r1, range.c0, range.c1)).has_value();
  };
  for (const auto& v : candidate_vectors(basis, n, options)) {
    ++stats.heuristic_vectors;
    if (good_for(v)) {
      out.vector = v;
      return out;
    }
  }
  std::optional<RationalVector> lambda;
  try {
    lambda = Searcher(p, basis, range, options, stats).run();
  } catch (const BudgetExceeded&) {
    out.reason = InconclusiveReason::Budget;
    return out;
  }
  if (!lambda) {
    out.reason = InconclusiveReason::Exhausted;
    return out;
  }
  auto v = combine(basis, *lambda, n);
  if (!is_zero(v)) {
    v = primitive(v);
  }
  if (!good_for(v)) {
    throw std::logic_error("search_submatrix: LP solution " + to_string(v) +
                           " does not make the submatrix good");
  }
  out.vector = std::move(v);
  out.from_lp = true;
  return out;
}

Verdict itest_search(const Presentation& p, const SearchOptions& options, SearchStats* stats) {
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  st = {};
  Verdict out;
  out.test = "itest-search";
  const std::size_t n = p.generator_count();
  if (n < p.relator_count()) {
    out.status = Status::Inapplicable;
    out.note = "fewer generators than relators";
    return out;
  }
  std::vector<ExponentVector> rows;
  for (const auto& r : p.relators) {
    rows.push_back(abelianize(r, n));
  }
  if (null_space(rows, n).empty()) {
    out.status = Status::Inapplicable;
    out.note = "only the zero vector is orthogonal to every relator";
    return out;
  }
  auto found = search_submatrix(p, {0, n, 0, p.relator_count()}, options, st);
  if (!found.vector) {
    out.status = Status::Inconclusive;
    out.reason = found.reason;
    out.note = found.reason == InconclusiveReason::Budget
                   ? "LP budget of " + std::to_string(options.lp_budget) + " calls exhausted"
                   : "no vector makes the weight matrix good (" + std::to_string(st.lp_calls) +
                         " LP calls)";
    return out;
  }
  auto verdict = itest_fixed(p, *found.vector);
  if (verdict.status != Status::ProvenDR) {
    throw std::logic_error("itest_search: vector " + to_string(*found.vector) +
                           " does not make the weight matrix good");
  }
  verdict.test = out.test;
  verdict.note += found.from_lp
                      ? " (pivot search, " + std::to_string(st.lp_calls) + " LP calls)"
                      : " (candidate vector)";
  return verdict;
}

}  // namespace drtest
