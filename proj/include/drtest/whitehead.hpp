#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "drtest/linear.hpp"
#include "drtest/presentation.hpp"

namespace drtest {

/// Vertex 2i is +x_i, vertex 2i+1 is -x_i.
inline std::size_t wh_vertex(const Letter& l) { return 2 * l.generator + (l.sign > 0 ? 0 : 1); }

struct WhiteheadEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t relator = 0;
  std::size_t corner = 0;  // 0-based k: joins letter k and letter k+1 (cyclically)
};

struct WhiteheadGraph {
  std::size_t vertex_count = 0;
  std::vector<WhiteheadEdge> edges;
};

std::string wh_vertex_name(const Presentation& p, std::size_t vertex);

/// Edge (e_k x_{i_k}, -e_{k+1} x_{i_{k+1}}) for every cyclically consecutive
/// letter pair of every relator.
WhiteheadGraph whitehead_graph(const Presentation& p);

/// Calls `visit` on each simple cycle, at most `cap` of them. Returns true
/// when the cap cut the enumeration short.
bool for_each_simple_cycle(const WhiteheadGraph& g, std::size_t cap,
                           const std::function<void(const std::vector<std::size_t>&)>& visit);

/// Simple cycles as edge-index lists. Self-loops are cycles of length one and
/// each pair of parallel edges is a cycle of length two. Stops after `cap`
/// cycles and sets `truncated`.
std::vector<std::vector<std::size_t>> simple_cycles(const WhiteheadGraph& g, std::size_t cap,
                                                    bool& truncated);

enum class WeightTestStatus { Feasible, Infeasible, Inapplicable, Truncated };

std::string to_string(WeightTestStatus s);

struct WeightTestResult {
  WeightTestStatus status = WeightTestStatus::Inapplicable;
  std::string note;
  LinearSystem system;
  RationalVector assignment;   // one weight per edge when feasible
  RationalVector certificate;  // Farkas multipliers when infeasible
  std::size_t cycle_count = 0;
};

/// Relator rows sum g(e) <= len(r_j) - 2 and cycle rows sum g(e) >= 2, one
/// variable per edge, decided exactly. Cycle rows enter the LP only once the
/// current solution violates them, so `system` holds the rows actually used.
/// A truncated enumeration still proves
/// infeasibility (fewer rows), but a feasible answer is then reported as
/// Truncated.
WeightTestResult weight_test(const Presentation& p, std::size_t cycle_cap = 100000);

}  // namespace drtest
