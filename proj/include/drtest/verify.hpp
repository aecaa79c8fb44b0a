#pragma once

#include <string>

#include "drtest/adian.hpp"
#include "drtest/presentation.hpp"
#include "drtest/witness.hpp"

// Re-checkers for witnesses. They recompute weights from suffixes directly
// and replay every combinatorial step, sharing nothing with the searches
// beyond the word and presentation primitives.

namespace drtest {

struct Check {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
  static Check fail(std::string why) { return {false, std::move(why)}; }
};

/// Goodness of the submatrix rows [r0, r1) x columns [c0, c1) of M(v); the
/// witness indices are local to the submatrix.
Check check_goodness(const Presentation& p, const RationalVector& v, const GoodnessWitness& w,
                     std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1);
Check check_goodness(const Presentation& p, const RationalVector& v, const GoodnessWitness& w);

Check check_vector_witness(const Presentation& p, const VectorWitness& w);
Check check_block_witness(const Presentation& p, const BlockWitness& w);
Check check_howie(const Log& g, const HowieWitness& w);
Check check_deforestation(const Log& g, const DeforestationWitness& w);
Check check_staged(const Log& g, const StagedDeforestationWitness& w);
Check check_deletions(const LabeledEdgeGraph& g, const std::vector<Deletion>& steps);
Check check_deletion_witness(const Presentation& p, const AdianPresentation* a,
                             const DeletionWitness& w);
Check check_hull(const Presentation& p, const HullWitness& w);
Check check_dyck(const Presentation& p, const DyckWitness& w);

/// What a verdict was computed from. `log` and `adian` are optional views of
/// the same input.
struct VerifyContext {
  const Presentation* presentation = nullptr;
  const Log* log = nullptr;
  const AdianPresentation* adian = nullptr;
};

/// Proven verdicts must carry a witness that passes its checker; other
/// verdicts pass trivially.
Check verify_verdict(const VerifyContext& ctx, const Verdict& v);

}  // namespace drtest
