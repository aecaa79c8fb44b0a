#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drtest/presentation.hpp"
#include "drtest/witness.hpp"

namespace drtest {

struct UndirectedGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // parallel edges allowed
};

/// One edge (label, terminal) per LOG edge.
UndirectedGraph initial_graph(const Log& g);
/// One edge (initial, label) per LOG edge.
UndirectedGraph terminal_graph(const Log& g);

/// No cycles; a self-loop or a pair of parallel edges is a cycle.
bool is_forest(const UndirectedGraph& g);
/// A forest with one component (and at least one vertex).
bool is_tree(const UndirectedGraph& g);

enum class DeforestTarget { Discrete, AnySubLog };

/// Backtracking search for a deforestation of `source` (a sub-LOG of g) of
/// the given kind. With target Discrete every edge of the source is removed;
/// with AnySubLog the first admissible sub-LOG reached after at least one
/// step is accepted. Choices are tried by vertex index, IL before T.
std::optional<DeforestationWitness> deforest(const Log& g, const SubLog& source,
                                             DeforestKind kind, DeforestTarget target);

/// Deforestation of the whole LOG to a discrete sub-LOG.
std::optional<DeforestationWitness> deforest(const Log& g, DeforestKind kind);

/// Every admissible sub-LOG (other than the source) reachable from `source`
/// by one deforestation of the given kind, each with a witness. Search stops
/// after `state_budget` states; `budget_hit` reports it.
std::vector<DeforestationWitness> deforestation_targets(const Log& g, const SubLog& source,
                                                        DeforestKind kind,
                                                        std::size_t state_budget,
                                                        bool& budget_hit);

struct WeakDeforestOptions {
  std::size_t max_stages = 4;
  std::size_t state_budget = 200000;
};

struct WeakDeforestResult {
  std::optional<std::vector<DeforestationWitness>> stages;
  bool budget_hit = false;
};

/// Depth-first search over staged deforestations ending in a discrete sub-LOG.
WeakDeforestResult is_weakly_deforestable(const Log& g, const WeakDeforestOptions& options = {});

/// The blocking of the LOG presentation induced by stages: the last stage's
/// source comes first, then the earlier stages back to the first one.
Blocking staged_blocking(const Log& g, const std::vector<DeforestationWitness>& stages);

/// The orders induced by a discrete deforestation: columns are the removed
/// edges, rows the removed vertices, both in removal order.
std::optional<VectorWitness> induced_vector_witness(const Log& g,
                                                    const DeforestationWitness& witness);

/// Howie's tree check, then deforestation of both kinds, then weak
/// deforestation checked through the block test.
Verdict log_verdict(const Log& g, const WeakDeforestOptions& options = {});

}  // namespace drtest
