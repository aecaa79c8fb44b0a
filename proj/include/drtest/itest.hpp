#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "drtest/presentation.hpp"
#include "drtest/rational.hpp"
#include "drtest/witness.hpp"

namespace drtest {

/// Inapplicable when n < m or v is not orthogonal to every relator;
/// ProvenDR when the weight matrix is good, Inconclusive otherwise. The zero
/// vector is accepted. Throws std::invalid_argument on a dimension mismatch.
Verdict itest_fixed(const Presentation& p, const RationalVector& v);

/// One term of the equation attached to a generator: the suffix s(k, r_j) at
/// an occurrence, with the occurrence's sign.
struct EquationTerm {
  std::size_t relator = 0;   // 0-based
  std::size_t position = 0;  // 1-based
  Word suffix;
  int sign = 1;
};

std::vector<EquationTerm> equation_terms(const Presentation& p, std::size_t generator);

/// e.g. "n^1_{g x^2 y^2 z^2} + n^2_{g z y z^-1} - n^3_{g w^-1 z} = 0"
std::string format_equation(const Presentation& p, std::size_t generator);

struct SearchOptions {
  std::size_t lp_budget = 100000;
  /// Integer combinations of basis vectors with coefficients in [-bound, bound].
  int coefficient_bound = 2;
  std::size_t heuristic_cap = 4096;
};

struct SearchStats {
  std::size_t heuristic_vectors = 0;
  std::size_t lp_calls = 0;
  std::size_t nodes = 0;
};

/// Rows [r0, r1) and columns [c0, c1) of the weight matrix.
struct Submatrix {
  std::size_t r0 = 0;
  std::size_t r1 = 0;
  std::size_t c0 = 0;
  std::size_t c1 = 0;
};

struct SubmatrixSearch {
  std::optional<RationalVector> vector;
  bool from_lp = false;
  InconclusiveReason reason = InconclusiveReason::None;
};

/// Looks for v orthogonal to every relator such that the given submatrix of
/// M(v) is good. On failure `reason` is Exhausted or Budget.
SubmatrixSearch search_submatrix(const Presentation& p, const Submatrix& range,
                                 const SearchOptions& options, SearchStats& stats);

/// Decides whether some v makes the weight matrix good. First tries cheap
/// candidate vectors in the null space, then enumerates pivot sequences
/// (row, column, occurrence) and asks an LP over the null-space coordinates
/// whether the conditions along the sequence can hold. Inconclusive(Exhausted)
/// means no v works; Inconclusive(Budget) means the LP budget ran out.
Verdict itest_search(const Presentation& p, const SearchOptions& options = {},
                     SearchStats* stats = nullptr);

}  // namespace drtest
