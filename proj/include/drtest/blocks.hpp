#pragma once

#include <cstddef>
#include <vector>

#include "drtest/itest.hpp"
#include "drtest/presentation.hpp"
#include "drtest/witness.hpp"

namespace drtest {

/// Throws ValidationError unless the cuts are strictly increasing, end at
/// (n, m), and relators 1..m_l use only generators 1..n_l. A presentation
/// without relators admits the single structure ({n}, {0}).
void validate_blocks(const Presentation& p, const BlockStructure& blocks);

/// The block test on a presentation already in block order: every diagonal
/// block M_l(v_l) must be good, each v_l orthogonal to every relator.
/// Throws ValidationError on a bad structure and std::invalid_argument on a
/// wrong vector count or dimension.
Verdict block_itest(const Presentation& p, const BlockStructure& blocks,
                    const std::vector<RationalVector>& vectors);

/// Same, after reordering p by the blocking.
Verdict block_itest(const Presentation& p, const Blocking& blocking,
                    const std::vector<RationalVector>& vectors);

/// Candidate blockings built from chains of closed relator sets (a set R is
/// closed when every relator whose generators all lie in supp(R) belongs to
/// R). Coarsest chains come first; at most `cap` are returned. Generators
/// used by no relator go to the last block.
std::vector<Blocking> detect_blocks(const Presentation& p, std::size_t cap = 256);

/// Tries each detected blocking with more than one block, searching a vector
/// for each diagonal block separately.
Verdict block_itest_search(const Presentation& p, const SearchOptions& options = {},
                           std::size_t cap = 256);

}  // namespace drtest
