#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "drtest/presentation.hpp"
#include "drtest/rational.hpp"

namespace drtest {

/// Exponent of x in s(k, r) at each occurrence k of x, in order. Throws when
/// x does not occur.
std::vector<std::int64_t> ivanov_sequence(const Word& r, std::size_t x);

struct DistinguishedPermutation {
  bool inverted = false;   // r was replaced by r^-1 (negative exponent sum)
  std::size_t start = 0;   // 1-based letter of (possibly inverted) r that r' begins with
  Word word;
  std::int64_t beta = 0;   // > 0
  std::vector<std::int64_t> sequence;
};

/// The first rotation starting with x^{+1} whose sequence satisfies
/// a_1 = beta > a_i for all i > 1. Throws when x has exponent sum 0.
DistinguishedPermutation distinguished_cyclic_perm(const Word& r, std::size_t x);

struct Perturbation {
  DistinguishedPermutation rotation;
  std::size_t index = 0;      // generator x_i of q that gets the power
  RationalVector vector;      // v, orthogonal to q's relators, v_i != 0
  std::vector<Rational> c;    // weights at M = 0
  /// Failing window for t = M v_i / beta: the criterion fails exactly when
  /// t lies in [t_low, t_high]. Empty when there is a single x-occurrence.
  bool has_window = false;
  Rational t_low;
  Rational t_high;
  std::int64_t m0 = 0;
};

/// `q` has n generators; `r` is a word over q's generators plus the extra
/// generator with index n. M_0 is the least natural number such that for
/// every |M| >= M_0 the occurrence weights of x in x_i^M r' have a unique
/// strict maximum or minimum at the first occurrence.
Perturbation perturbation_bound(const Presentation& q, const Word& r, std::size_t index,
                                const RationalVector& v);

/// Weights of the x-occurrences of x_i^M r' for the vector (v, alpha_M).
std::vector<Rational> perturbed_weights(const Perturbation& pert, std::int64_t m);

/// True when the first weight is strictly above or strictly below all others.
bool unique_extremum_at_first(const std::vector<Rational>& weights);

/// q plus the extra generator and the relator x_i^M r'.
Presentation perturbed_presentation(const Presentation& q, const std::string& extra,
                                    const Perturbation& pert, std::int64_t m);

}  // namespace drtest
