#include <numeric>

#include "drtest/blocks.hpp"
#include "drtest/itest.hpp"
#include "drtest/log.hpp"

namespace drtest {

UndirectedGraph initial_graph(const Log& g) {
  UndirectedGraph out{g.vertices, {}};
  for (const auto& e : g.edges) {
    out.edges.emplace_back(e.label, e.terminal);
  }
  return out;
}

UndirectedGraph terminal_graph(const Log& g) {
  UndirectedGraph out{g.vertices, {}};
  for (const auto& e : g.edges) {
    out.edges.emplace_back(e.init, e.label);
  }
  return out;
}

namespace {

// Union-find; returns the number of components, or 0 when a cycle exists.
std::size_t components_if_acyclic(const UndirectedGraph& g) {
  std::vector<std::size_t> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t components = g.vertices.size();
  for (const auto& [a, b] : g.edges) {
    auto ra = find(a);
    auto rb = find(b);
    if (ra == rb) {
      return 0;
    }
    parent[ra] = rb;
    --components;
  }
  return components;
}

}  // namespace

bool is_forest(const UndirectedGraph& g) {
  return g.vertices.empty() || components_if_acyclic(g) > 0;
}

bool is_tree(const UndirectedGraph& g) { return components_if_acyclic(g) == 1; }

Blocking staged_blocking(const Log& g, const std::vector<DeforestationWitness>& stages) {
  Blocking b;
  if (stages.empty()) {
    return b;
  }
  auto append_stage = [&](const DeforestationWitness& stage) {
    for (const auto& step : stage.steps) {
      b.generator_order.push_back(step.vertex);
      b.relator_order.push_back(step.edge);
    }
  };
  append_stage(stages.back());
  const SubLog& last = stages.back().target;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (last.vertices[v]) {
      b.generator_order.push_back(v);
    }
  }
  b.blocks.generator_cuts.push_back(b.generator_order.size());
  b.blocks.relator_cuts.push_back(b.relator_order.size());
  for (std::size_t s = stages.size() - 1; s-- > 0;) {
    append_stage(stages[s]);
    b.blocks.generator_cuts.push_back(b.generator_order.size());
    b.blocks.relator_cuts.push_back(b.relator_order.size());
  }
  return b;
}

std::optional<VectorWitness> induced_vector_witness(const Log& g,
                                                    const DeforestationWitness& witness) {
  if (!witness.target.discrete()) {
    return std::nullopt;
  }
  auto p = log_to_presentation(g);
  RationalVector v(g.vertex_count(), Rational(witness.kind == DeforestKind::ILT ? 1 : -1));
  std::vector<std::size_t> cols;
  std::vector<std::size_t> rows;
  for (const auto& step : witness.steps) {
    cols.push_back(step.edge);
    rows.push_back(step.vertex);
  }
  auto good = goodness_for_orders(weight_matrix(p, v), cols, rows);
  if (!good) {
    return std::nullopt;
  }
  return VectorWitness{v, std::move(*good)};
}

Verdict log_verdict(const Log& g, const WeakDeforestOptions& options) {
  g.validate();
  Verdict out;
  out.test = "log";
  auto p = log_to_presentation(g);

  std::optional<HowieWitness> howie;
  if (is_tree(initial_graph(g))) {
    howie = HowieWitness{true};
  } else if (is_tree(terminal_graph(g))) {
    howie = HowieWitness{false};
  }
  std::string howie_note =
      howie ? (howie->initial_graph ? "initial graph is a tree; " : "terminal graph is a tree; ")
            : "";

  for (auto kind : {DeforestKind::ILT, DeforestKind::TLI}) {
    auto w = deforest(g, kind);
    if (!w) {
      continue;
    }
    w->induced = induced_vector_witness(g, *w);
    const char* name = kind == DeforestKind::ILT ? "IL/T" : "TL/I";
    if (!w->induced || itest_fixed(p, w->induced->vector).status != Status::ProvenDR) {
      throw std::logic_error(std::string("log_verdict: ") + name +
                             " deforestation does not induce a good weight matrix");
    }
    out.status = Status::ProvenDR;
    out.note = howie_note + "deforestation of type " + name + " to a discrete sub-LOG";
    out.witness = std::move(*w);
    return out;
  }

  auto weak = is_weakly_deforestable(g, options);
  if (weak.stages) {
    StagedDeforestationWitness staged{*weak.stages, std::nullopt};
    auto blocking = staged_blocking(g, staged.stages);
    std::vector<RationalVector> vectors;
    for (std::size_t s = staged.stages.size(); s-- > 0;) {
      int sign = staged.stages[s].kind == DeforestKind::ILT ? 1 : -1;
      vectors.emplace_back(g.vertex_count(), Rational(sign));
    }
    auto verdict = block_itest(p, blocking, vectors);
    if (verdict.status != Status::ProvenDR) {
      throw std::logic_error("log_verdict: weak deforestation does not pass the block test");
    }
    staged.blocks = std::get<BlockWitness>(verdict.witness);
    out.status = Status::ProvenDR;
    out.note = howie_note + "weakly deforestable in " + std::to_string(staged.stages.size()) +
               " stages";
    out.witness = std::move(staged);
    return out;
  }

  if (howie) {
    out.status = Status::ProvenAspherical;
    out.note = howie_note + "no deforestation found";
    out.witness = *howie;
    return out;
  }
  out.status = Status::Inconclusive;
  out.reason = weak.budget_hit ? InconclusiveReason::Budget : InconclusiveReason::None;
  out.note = weak.budget_hit ? "not deforestable; weak deforestation search hit its budget"
                             : "neither deforestable nor weakly deforestable within " +
                                   std::to_string(options.max_stages) + " stages";
  return out;
}

}  // namespace drtest
