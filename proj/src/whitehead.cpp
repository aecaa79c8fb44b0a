#include "drtest/whitehead.hpp"

#include <functional>

namespace drtest {

std::string wh_vertex_name(const Presentation& p, std::size_t vertex) {
  return (vertex % 2 == 0 ? "" : "-") + p.generators.at(vertex / 2);
}

WhiteheadGraph whitehead_graph(const Presentation& p) {
  p.validate();
  WhiteheadGraph g{2 * p.generator_count(), {}};
  for (std::size_t j = 0; j < p.relator_count(); ++j) {
    const Word& r = p.relators[j];
    for (std::size_t k = 0; k < r.size(); ++k) {
      const Letter& next = r[(k + 1) % r.size()];
      g.edges.push_back({wh_vertex(r[k]), wh_vertex(next.inverse()), j, k});
    }
  }
  return g;
}

bool for_each_simple_cycle(const WhiteheadGraph& g, std::size_t cap,
                           const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(g.vertex_count);
  std::size_t seen = 0;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    if (edge.a == edge.b) {
      if (seen >= cap) {
        return true;
      }
      ++seen;
      visit({e});
      continue;
    }
    adj[edge.a].emplace_back(edge.b, e);
    adj[edge.b].emplace_back(edge.a, e);
  }
  // Each cycle is rooted at its smallest vertex and walked in the direction
  // whose first edge index is smaller than its last.
  std::vector<bool> on_path(g.vertex_count, false);
  std::vector<std::size_t> path;
  std::function<bool(std::size_t, std::size_t)> walk = [&](std::size_t start, std::size_t v) {
    for (const auto& [w, e] : adj[v]) {
      if (w == start && !path.empty() && path.front() < e) {
        if (seen >= cap) {
          return false;
        }
        ++seen;
        path.push_back(e);
        visit(path);
        path.pop_back();
        continue;
      }
      if (w <= start || on_path[w]) {
        continue;
      }
      on_path[w] = true;
      path.push_back(e);
      bool ok = walk(start, w);
      path.pop_back();
      on_path[w] = false;
      if (!ok) {
        return false;
      }
    }
    return true;
  };
  for (std::size_t s = 0; s < g.vertex_count; ++s) {
    on_path[s] = true;
    bool ok = walk(s, s);
    on_path[s] = false;
    if (!ok) {
      return true;
    }
  }
  return false;
}

std::vector<std::vector<std::size_t>> simple_cycles(const WhiteheadGraph& g, std::size_t cap,
                                                    bool& truncated) {
  std::vector<std::vector<std::size_t>> out;
  truncated = for_each_simple_cycle(g, cap, [&](const auto& c) { out.push_back(c); });
  return out;
}

std::string to_string(WeightTestStatus s) {
  switch (s) {
    case WeightTestStatus::Feasible:
      return "feasible";
    case WeightTestStatus::Infeasible:
      return "infeasible";
    case WeightTestStatus::Inapplicable:
      return "inapplicable";
    case WeightTestStatus::Truncated:
      return "truncated";
  }
  return "?";
}

WeightTestResult weight_test(const Presentation& p, std::size_t cycle_cap) {
  p.validate();
  WeightTestResult out;
  for (std::size_t j = 0; j < p.relator_count(); ++j) {
    if (is_proper_power(p.relators[j])) {
      out.status = WeightTestStatus::Inapplicable;
      out.note = "relator " + std::to_string(j + 1) + " is a proper power";
      return out;
    }
  }
  auto g = whitehead_graph(p);
  LinearSystem sys(g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    sys.variables[e] = "g" + std::to_string(e + 1);
  }
  for (std::size_t j = 0; j < p.relator_count(); ++j) {
    RationalVector row(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (g.edges[e].relator == j) {
        row[e] = -1;
      }
    }
    sys.add(std::move(row), Relation::Ge,
            -(static_cast<long>(p.relators[j].size()) - 2));
  }
  // Cycle rows are added lazily: solve, collect cycles the current weights
  // violate, repeat. A pass with no violated cycle means the full system holds.
  constexpr std::size_t kRowsPerRound = 64;
  bool truncated = false;
  FeasibilityResult result = feasible(sys);
  while (result.is_feasible()) {
    const RationalVector& x = *result.witness;
    std::vector<RationalVector> violated;
    out.cycle_count = 0;
    truncated = for_each_simple_cycle(g, cycle_cap, [&](const std::vector<std::size_t>& cycle) {
      ++out.cycle_count;
      if (violated.size() >= kRowsPerRound) {
        return;
      }
      Rational sum = 0;
      for (auto e : cycle) {
        sum += x[e];
      }
      if (sum < 2) {
        RationalVector row(g.edges.size());
        for (auto e : cycle) {
          row[e] += 1;
        }
        violated.push_back(std::move(row));
      }
    });
    if (violated.empty()) {
      break;
    }
    for (auto& row : violated) {
      sys.add(std::move(row), Relation::Ge, 2);
    }
    result = feasible(sys);
  }
  out.system = sys;
  if (result.is_feasible()) {
    out.assignment = *result.witness;
    out.status = truncated ? WeightTestStatus::Truncated : WeightTestStatus::Feasible;
    out.note = truncated ? "cycle enumeration hit the cap; feasibility is not conclusive"
                         : "weight function found";
  } else {
    out.certificate = result.certificate;
    out.status = WeightTestStatus::Infeasible;
    out.note = "no weight function";
  }
  return out;
}

}  // namespace drtest
