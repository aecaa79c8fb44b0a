#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drtest/rational.hpp"
#include "drtest/word.hpp"

namespace drtest {

enum class Relation { Eq, Ge, Gt };

struct Constraint {
  RationalVector coeffs;
  Relation relation = Relation::Ge;
  Rational rhs;
};

struct LinearSystem {
  std::vector<std::string> variables;
  std::vector<Constraint> constraints;

  LinearSystem() = default;
  explicit LinearSystem(std::size_t variable_count);

  std::size_t variable_count() const { return variables.size(); }
  void add(RationalVector coeffs, Relation relation, Rational rhs);

  /// Throws std::invalid_argument when a coefficient vector has the wrong size.
  void validate() const;
};

/// Every `a.x > 0` becomes `a.x >= 1`. Both systems are feasible together,
/// by scaling. Throws if a strict constraint has a nonzero right-hand side.
LinearSystem strictify(const LinearSystem& sys);

/// Either a point satisfying every constraint, or multipliers u with
/// u >= 0 on `>=` rows, u^T A = 0 and u^T b > 0.
struct FeasibilityResult {
  std::optional<RationalVector> witness;
  RationalVector certificate;

  bool is_feasible() const { return witness.has_value(); }
};

/// Exact phase-one simplex. The system must not contain
/// strict constraints (call strictify first).
FeasibilityResult feasible(const LinearSystem& sys);

/// Exact re-evaluation of every constraint, strict ones included.
bool satisfies(const LinearSystem& sys, const RationalVector& x);

/// Checks the Farkas conditions above for a system without strict rows.
bool certifies_infeasible(const LinearSystem& sys, const RationalVector& u);

/// Basis of {v : <row, v> = 0 for every row}, as primitive integer vectors,
/// one per free column of the reduced row echelon form.
std::vector<RationalVector> null_space(const std::vector<ExponentVector>& rows, std::size_t n);
std::vector<RationalVector> null_space(const std::vector<RationalVector>& rows, std::size_t n);

/// True iff `point` is not a convex combination of `cloud` with one copy of
/// `point` removed. Throws std::invalid_argument if point is not in cloud.
bool is_extreme(const RationalVector& point, const std::vector<RationalVector>& cloud);

/// A vector c with <c, point> > <c, p> for every other member p of the
/// cloud (after removing one copy of point), when point is extreme.
std::optional<RationalVector> extreme_normal(const RationalVector& point,
                                             const std::vector<RationalVector>& cloud);

}  // namespace drtest
