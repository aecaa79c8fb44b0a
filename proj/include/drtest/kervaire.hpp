#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "drtest/presentation.hpp"
#include "drtest/rational.hpp"
#include "drtest/witness.hpp"

namespace drtest {

struct OccurrencePoint {
  std::size_t position = 0;  // 1-based
  RationalVector point;
};

/// q(s(k, r)) for every occurrence k of generator i, in position order.
/// Throws std::invalid_argument when q(r) != 0.
std::vector<OccurrencePoint> occurrence_cloud(const Word& r, std::size_t i, std::size_t n);

/// Certificate for one occurrence: the point must be extreme and of
/// multiplicity one in its cloud. The normal c satisfies <c, point> > <c, p>
/// for the other points and is confirmed through itest_fixed.
std::optional<HullWitness> hull_certificate(const Presentation& p, std::size_t generator,
                                            std::size_t position);

/// One-relator presentations with q(r) = 0. Scans generators, then
/// occurrences; every qualifying occurrence is recorded in `candidates` and
/// the first one becomes the witness.
Verdict hull_test(const Presentation& p);

/// Maximal runs of equal letters (same generator and sign).
std::vector<std::pair<Letter, std::size_t>> syllables(const Word& w);

/// Two generators, q(w) = 0. Looks for a rotation whose x-shape is a strong
/// Dyck word and whose syllables satisfy z_1 = z_{p-1} = x, z_p = y, trying
/// both generators in the role of x. ProvenDR (hence Kervaire) on success.
Verdict dyck_test(const Presentation& p);

/// [w_n, [w_{n-1}, ... [w_1, [x, y]] ...]] over generators x = 0, y = 1.
/// With `validate`, each w_i must be nonempty and all positive or all negative.
Word build_tower(const std::vector<Word>& words, bool validate = true);

}  // namespace drtest
