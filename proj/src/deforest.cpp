#include <map>
#include <set>

#include "drtest/log.hpp"

namespace drtest {

namespace {

// Works on the LOG as given for IL/T and on its opposite for TL/I; edge and
// vertex indices are shared by both.
class Deforester {
 public:
  Deforester(const Log& g, const SubLog& source, DeforestKind kind, std::size_t budget)
      : g_(kind == DeforestKind::ILT ? g : g.opposite()),
        original_(g),
        source_(source),
        kind_(kind),
        budget_(budget),
        removed_edges_(g.edge_count(), false),
        removed_vertices_(g.vertex_count(), false),
        init_or_label_in_source_(g.vertex_count(), false) {
    for (std::size_t e = 0; e < g_.edge_count(); ++e) {
      if (source_.edges[e]) {
        init_or_label_in_source_[g_.edges[e].init] = true;
        init_or_label_in_source_[g_.edges[e].label] = true;
      }
    }
  }

  std::optional<DeforestationWitness> to_discrete() {
    if (discrete_now()) {
      return witness();
    }
    if (!remember()) {
      return std::nullopt;
    }
    for (const auto& step : choices()) {
      apply(step);
      auto found = to_discrete();
      undo(step);
      if (found) {
        return found;
      }
    }
    return std::nullopt;
  }

  /// Every admissible state after at least one step, first path each.
  void all_targets(std::vector<DeforestationWitness>& out) {
    if (!remember()) {
      return;
    }
    if (!steps_.empty() && current().admissible(original_)) {
      out.push_back(witness());
    }
    for (const auto& step : choices()) {
      apply(step);
      all_targets(out);
      undo(step);
    }
  }

  std::optional<DeforestationWitness> first_target() {
    if (!steps_.empty() && current().admissible(original_)) {
      return witness();
    }
    if (!remember()) {
      return std::nullopt;
    }
    for (const auto& step : choices()) {
      apply(step);
      auto found = first_target();
      undo(step);
      if (found) {
        return found;
      }
    }
    return std::nullopt;
  }

  bool budget_hit() const { return budget_hit_; }

 private:
  bool edge_present(std::size_t e) const { return source_.edges[e] && !removed_edges_[e]; }

  bool discrete_now() const {
    for (std::size_t e = 0; e < g_.edge_count(); ++e) {
      if (edge_present(e)) {
        return false;
      }
    }
    return true;
  }

  // Marks the state visited; false when seen before or over budget.
  bool remember() {
    if (visited_.size() >= budget_) {
      budget_hit_ = true;
      return false;
    }
    return visited_.emplace(removed_edges_, removed_vertices_).second;
  }

  // Every IL move first, then every T move, each by vertex index.
  std::vector<DeforestStep> choices() const {
    std::vector<DeforestStep> il;
    std::vector<DeforestStep> t;
    for (std::size_t x = 0; x < g_.vertex_count(); ++x) {
      if (!source_.vertices[x] || removed_vertices_[x]) {
        continue;
      }
      std::size_t count = 0;
      std::size_t edge = 0;
      for (std::size_t e = 0; e < g_.edge_count(); ++e) {
        if (!edge_present(e)) {
          continue;
        }
        std::size_t hits = (g_.edges[e].init == x ? 1 : 0) + (g_.edges[e].label == x ? 1 : 0);
        if (hits > 0) {
          edge = e;
        }
        count += hits;
      }
      if (count == 1) {
        il.push_back({edge, x, Clause::IL});
        continue;
      }
      if (init_or_label_in_source_[x]) {
        continue;
      }
      count = 0;
      for (std::size_t e = 0; e < g_.edge_count(); ++e) {
        if (edge_present(e) && g_.edges[e].terminal == x) {
          edge = e;
          ++count;
        }
      }
      if (count == 1) {
        t.push_back({edge, x, Clause::T});
      }
    }
    il.insert(il.end(), t.begin(), t.end());
    return il;
  }

  void apply(const DeforestStep& s) {
    removed_edges_[s.edge] = true;
    removed_vertices_[s.vertex] = true;
    steps_.push_back(s);
  }

  void undo(const DeforestStep& s) {
    removed_edges_[s.edge] = false;
    removed_vertices_[s.vertex] = false;
    steps_.pop_back();
  }

  SubLog current() const {
    SubLog out = source_;
    for (std::size_t e = 0; e < out.edges.size(); ++e) {
      out.edges[e] = out.edges[e] && !removed_edges_[e];
    }
    for (std::size_t v = 0; v < out.vertices.size(); ++v) {
      out.vertices[v] = out.vertices[v] && !removed_vertices_[v];
    }
    return out;
  }

  DeforestationWitness witness() const {
    return {kind_, source_, current(), steps_, std::nullopt};
  }

  Log g_;
  const Log& original_;
  SubLog source_;
  DeforestKind kind_;
  std::size_t budget_;
  bool budget_hit_ = false;
  std::vector<bool> removed_edges_;
  std::vector<bool> removed_vertices_;
  std::vector<bool> init_or_label_in_source_;
  std::vector<DeforestStep> steps_;
  std::set<std::pair<std::vector<bool>, std::vector<bool>>> visited_;
};

constexpr std::size_t unlimited = static_cast<std::size_t>(-1);

}  // namespace

std::optional<DeforestationWitness> deforest(const Log& g, const SubLog& source,
                                             DeforestKind kind, DeforestTarget target) {
  if (!source.admissible(g)) {
    throw std::invalid_argument("deforest: source is not an admissible sub-LOG");
  }
  Deforester d(g, source, kind, unlimited);
  return target == DeforestTarget::Discrete ? d.to_discrete() : d.first_target();
}

std::optional<DeforestationWitness> deforest(const Log& g, DeforestKind kind) {
  return deforest(g, SubLog::full(g), kind, DeforestTarget::Discrete);
}

std::vector<DeforestationWitness> deforestation_targets(const Log& g, const SubLog& source,
                                                        DeforestKind kind,
                                                        std::size_t state_budget,
                                                        bool& budget_hit) {
  Deforester d(g, source, kind, state_budget);
  std::vector<DeforestationWitness> out;
  d.all_targets(out);
  budget_hit = budget_hit || d.budget_hit();
  return out;
}

namespace {

struct WeakSearch {
  const Log& g;
  const WeakDeforestOptions& options;
  std::size_t states = 0;
  bool budget_hit = false;
  std::set<std::pair<SubLog, std::size_t>> failed;
  std::vector<DeforestationWitness> stages;

  bool run(const SubLog& source, std::size_t stages_left) {
    if (stages_left == 0 || failed.count({source, stages_left}) != 0) {
      return false;
    }
    std::vector<DeforestationWitness> targets;
    for (auto kind : {DeforestKind::ILT, DeforestKind::TLI}) {
      if (states >= options.state_budget) {
        budget_hit = true;
        return false;
      }
      auto found = deforestation_targets(g, source, kind, options.state_budget - states, budget_hit);
      states += found.size() + 1;
      for (auto& t : found) {
        if (t.target.discrete()) {
          stages.push_back(std::move(t));
          return true;
        }
        targets.push_back(std::move(t));
      }
    }
    for (auto& t : targets) {
      stages.push_back(t);
      if (run(t.target, stages_left - 1)) {
        return true;
      }
      stages.pop_back();
    }
    failed.insert({source, stages_left});
    return false;
  }
};

}  // namespace

WeakDeforestResult is_weakly_deforestable(const Log& g, const WeakDeforestOptions& options) {
  WeakSearch search{g, options, 0, false, {}, {}};
  WeakDeforestResult out;
  if (search.run(SubLog::full(g), options.max_stages)) {
    out.stages = std::move(search.stages);
  } else if (g.edge_count() == 0) {
    out.stages = std::vector<DeforestationWitness>{};
  }
  out.budget_hit = search.budget_hit;
  return out;
}

}  // namespace drtest
