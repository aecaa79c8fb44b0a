#include "drtest/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "drtest/log.hpp"

namespace drtest {

namespace {

std::string num(std::size_t x) { return std::to_string(x); }

Rational suffix_weight(const Word& r, std::size_t k, const RationalVector& v) {
  auto q = abelianize(suffix_s(r, k), v.size());
  Rational out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += v[i] * q[i];
  }
  return out;
}

// Weights of generator i in relator j, recomputed from the suffixes.
std::vector<Rational> cell(const Presentation& p, const RationalVector& v, std::size_t i,
                           std::size_t j) {
  std::vector<Rational> out;
  for (auto k : occurrences(p.relators[j], i)) {
    out.push_back(suffix_weight(p.relators[j], k, v));
  }
  return out;
}

Check orthogonal(const Presentation& p, const RationalVector& v) {
  if (v.size() != p.generator_count()) {
    return Check::fail("vector has dimension " + num(v.size()));
  }
  for (std::size_t j = 0; j < p.relator_count(); ++j) {
    auto q = abelianize(p.relators[j], v.size());
    Rational s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += v[i] * q[i];
    }
    if (s != 0) {
      return Check::fail("vector is not orthogonal to relator " + num(j + 1));
    }
  }
  return {};
}

bool is_permutation_of_range(const std::vector<std::size_t>& xs, std::size_t n) {
  std::vector<std::size_t> sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t t = 0; t < sorted.size(); ++t) {
    if (sorted[t] != t) {
      return false;
    }
  }
  return sorted.size() == n;
}

}  // namespace

Check check_goodness(const Presentation& p, const RationalVector& v, const GoodnessWitness& w,
                     std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
  const std::size_t cols = c1 - c0;
  if (!is_permutation_of_range(w.column_order, cols)) {
    return Check::fail("column order is not a permutation of the block's columns");
  }
  if (w.row_order.size() != cols) {
    return Check::fail("row order has the wrong length");
  }
  std::set<std::size_t> seen(w.row_order.begin(), w.row_order.end());
  if (seen.size() != cols || (!seen.empty() && *seen.rbegin() >= r1 - r0)) {
    return Check::fail("row order repeats a row or leaves the block");
  }
  for (std::size_t k = 0; k < cols; ++k) {
    std::size_t row = r0 + w.row_order[k];
    std::optional<Rational> top;
    for (std::size_t j = c0; j < c1; ++j) {
      for (const auto& x : cell(p, v, row, j)) {
        if (!top || x > *top) {
          top = x;
        }
      }
    }
    auto here = cell(p, v, row, c0 + w.column_order[k]);
    if (!top || std::find(here.begin(), here.end(), *top) == here.end()) {
      return Check::fail("step " + num(k + 1) + ": pivot cell misses the row maximum");
    }
    std::size_t mult = 0;
    for (std::size_t l = k; l < cols; ++l) {
      auto vals = cell(p, v, row, c0 + w.column_order[l]);
      mult += static_cast<std::size_t>(std::count(vals.begin(), vals.end(), *top));
    }
    if (mult != 1) {
      return Check::fail("step " + num(k + 1) + ": row maximum has multiplicity " + num(mult) +
                         " in the remaining columns");
    }
    if (k < w.pivots.size() && w.pivots[k].value != *top) {
      return Check::fail("step " + num(k + 1) + ": recorded pivot value differs");
    }
  }
  return {};
}

Check check_goodness(const Presentation& p, const RationalVector& v, const GoodnessWitness& w) {
  if (p.generator_count() < p.relator_count()) {
    return Check::fail("fewer generators than relators");
  }
  return check_goodness(p, v, w, 0, p.generator_count(), 0, p.relator_count());
}

Check check_vector_witness(const Presentation& p, const VectorWitness& w) {
  if (auto c = orthogonal(p, w.vector); !c) {
    return c;
  }
  return check_goodness(p, w.vector, w.goodness);
}

Check check_block_witness(const Presentation& p, const BlockWitness& w) {
  const auto& b = w.blocking;
  if (!is_permutation_of_range(b.generator_order, p.generator_count()) ||
      !is_permutation_of_range(b.relator_order, p.relator_count())) {
    return Check::fail("blocking orders are not permutations");
  }
  auto q = reorder(p, b.generator_order, b.relator_order);
  const auto& gc = b.blocks.generator_cuts;
  const auto& rc = b.blocks.relator_cuts;
  if (gc.empty() || gc.size() != rc.size() || gc.back() != q.generator_count() ||
      rc.back() != q.relator_count()) {
    return Check::fail("malformed block cuts");
  }
  if (w.vectors.size() != gc.size() || w.goodness.size() != gc.size()) {
    return Check::fail("need one vector and one goodness witness per block");
  }
  for (std::size_t l = 0; l < gc.size(); ++l) {
    std::size_t g0 = l == 0 ? 0 : gc[l - 1];
    std::size_t r0 = l == 0 ? 0 : rc[l - 1];
    if (gc[l] <= g0 || rc[l] <= r0) {
      return Check::fail("block cuts are not strictly increasing");
    }
    for (std::size_t j = r0; j < rc[l]; ++j) {
      if (q.relators[j].alphabet_bound() > gc[l]) {
        return Check::fail("relator " + num(j + 1) + " leaves its block");
      }
    }
    if (auto c = orthogonal(p, w.vectors[l]); !c) {
      return Check::fail("block " + num(l + 1) + ": " + c.reason);
    }
    RationalVector local(b.generator_order.size());
    for (std::size_t t = 0; t < local.size(); ++t) {
      local[t] = w.vectors[l][b.generator_order[t]];
    }
    if (auto c = check_goodness(q, local, w.goodness[l], g0, gc[l], r0, rc[l]); !c) {
      return Check::fail("block " + num(l + 1) + ": " + c.reason);
    }
  }
  return {};
}

Check check_howie(const Log& g, const HowieWitness& w) {
  return is_tree(w.initial_graph ? initial_graph(g) : terminal_graph(g))
             ? Check{}
             : Check::fail("the claimed graph is not a tree");
}

Check check_deforestation(const Log& g, const DeforestationWitness& w) {
  if (w.source.vertices.size() != g.vertex_count() || w.source.edges.size() != g.edge_count() ||
      !w.source.admissible(g)) {
    return Check::fail("source is not an admissible sub-LOG");
  }
  const Log h = w.kind == DeforestKind::ILT ? g : g.opposite();
  SubLog cur = w.source;
  for (std::size_t s = 0; s < w.steps.size(); ++s) {
    const auto& step = w.steps[s];
    const std::string at = "step " + num(s + 1) + ": ";
    if (step.edge >= h.edge_count() || step.vertex >= h.vertex_count() ||
        !cur.edges[step.edge] || !cur.vertices[step.vertex]) {
      return Check::fail(at + "edge or vertex is not present");
    }
    const std::size_t x = step.vertex;
    if (step.clause == Clause::IL) {
      std::size_t hits = 0;
      for (std::size_t e = 0; e < h.edge_count(); ++e) {
        if (cur.edges[e]) {
          hits += (h.edges[e].init == x) + (h.edges[e].label == x);
        }
      }
      const auto& e = h.edges[step.edge];
      if (hits != 1 || (e.init != x && e.label != x)) {
        return Check::fail(at + "first clause does not hold");
      }
    } else {
      for (std::size_t e = 0; e < h.edge_count(); ++e) {
        if (w.source.edges[e] && (h.edges[e].init == x || h.edges[e].label == x)) {
          return Check::fail(at + "vertex is an initial vertex or label in the source");
        }
      }
      std::size_t hits = 0;
      for (std::size_t e = 0; e < h.edge_count(); ++e) {
        hits += cur.edges[e] && h.edges[e].terminal == x;
      }
      if (hits != 1 || h.edges[step.edge].terminal != x) {
        return Check::fail(at + "second clause does not hold");
      }
    }
    cur.edges[step.edge] = false;
    cur.vertices[step.vertex] = false;
  }
  if (!(cur == w.target)) {
    return Check::fail("replay does not end at the recorded target");
  }
  if (!cur.admissible(g)) {
    return Check::fail("target is not admissible");
  }
  if (w.induced) {
    if (!cur.discrete()) {
      return Check::fail("induced vector recorded for a non-discrete target");
    }
    Rational sign(w.kind == DeforestKind::ILT ? 1 : -1);
    if (w.induced->vector != RationalVector(g.vertex_count(), sign)) {
      return Check::fail("induced vector is not the all-ones vector of the right sign");
    }
    for (std::size_t s = 0; s < w.steps.size(); ++s) {
      const auto& gw = w.induced->goodness;
      if (gw.column_order.size() != w.steps.size() || gw.column_order[s] != w.steps[s].edge ||
          gw.row_order[s] != w.steps[s].vertex) {
        return Check::fail("induced orders do not follow the removal order");
      }
    }
    return check_vector_witness(log_to_presentation(g), *w.induced);
  }
  return {};
}

Check check_staged(const Log& g, const StagedDeforestationWitness& w) {
  if (w.stages.empty()) {
    return g.edge_count() == 0 ? Check{} : Check::fail("no stages");
  }
  if (!(w.stages.front().source == SubLog::full(g))) {
    return Check::fail("first stage does not start at the whole LOG");
  }
  for (std::size_t s = 0; s < w.stages.size(); ++s) {
    if (s > 0 && !(w.stages[s].source == w.stages[s - 1].target)) {
      return Check::fail("stage " + num(s + 1) + " does not start where the previous ended");
    }
    if (w.stages[s].steps.empty()) {
      return Check::fail("stage " + num(s + 1) + " removes nothing");
    }
    if (auto c = check_deforestation(g, w.stages[s]); !c) {
      return Check::fail("stage " + num(s + 1) + ": " + c.reason);
    }
  }
  if (!w.stages.back().target.discrete()) {
    return Check::fail("last stage does not reach a discrete sub-LOG");
  }
  if (w.blocks) {
    return check_block_witness(log_to_presentation(g), *w.blocks);
  }
  return {};
}

Check check_deletions(const LabeledEdgeGraph& g, const std::vector<Deletion>& steps) {
  std::vector<bool> alive(g.edges.size(), true);
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const auto& d = steps[s];
    if (d.edge >= g.edges.size() || !alive[d.edge]) {
      return Check::fail("deletion " + num(s + 1) + ": edge already gone");
    }
    const auto& labels = g.edges[d.edge].labels;
    if (std::find(labels.begin(), labels.end(), d.generator) == labels.end()) {
      return Check::fail("deletion " + num(s + 1) + ": generator does not label the edge");
    }
    std::size_t mult = 0;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (alive[e]) {
        mult += static_cast<std::size_t>(
            std::count(g.edges[e].labels.begin(), g.edges[e].labels.end(), d.generator));
      }
    }
    if (mult != 1) {
      return Check::fail("deletion " + num(s + 1) + ": label multiplicity is " + num(mult));
    }
    alive[d.edge] = false;
  }
  if (std::any_of(alive.begin(), alive.end(), [](bool b) { return b; })) {
    return Check::fail("edges remain after the last deletion");
  }
  return {};
}

Check check_deletion_witness(const Presentation& p, const AdianPresentation* a,
                             const DeletionWitness& w) {
  if (w.generalized) {
    auto g = generalized_left_graph(p);
    if (!g) {
      return Check::fail("generalized left graph does not exist");
    }
    return check_deletions(*g, w.steps);
  }
  if (a == nullptr) {
    return Check::fail("deletion witness needs the Adian form of the input");
  }
  auto g = w.side == Side::Left ? left_graph(*a) : right_graph(*a);
  if (auto c = check_deletions(g, w.steps); !c) {
    return c;
  }
  if (!w.induced) {
    return Check::fail("no induced vector witness");
  }
  Rational sign(w.side == Side::Left ? 1 : -1);
  if (w.induced->vector != RationalVector(a->generators.size(), sign)) {
    return Check::fail("induced vector is not the all-ones vector of the right sign");
  }
  return check_vector_witness(a->to_presentation(), *w.induced);
}

Check check_hull(const Presentation& p, const HullWitness& w) {
  if (p.relator_count() != 1 || w.generator >= p.generator_count()) {
    return Check::fail("hull witness needs one relator and a valid generator");
  }
  const Word& r = p.relators[0];
  if (w.normal.size() != p.generator_count()) {
    return Check::fail("normal has the wrong dimension");
  }
  auto occ = occurrences(r, w.generator);
  if (std::find(occ.begin(), occ.end(), w.position) == occ.end()) {
    return Check::fail("no occurrence at the recorded position");
  }
  auto point_of = [&](std::size_t k) {
    auto q = abelianize(suffix_s(r, k), p.generator_count());
    RationalVector out;
    for (auto x : q) {
      out.emplace_back(x);
    }
    return out;
  };
  if (point_of(w.position) != w.point) {
    return Check::fail("recorded point differs from the suffix class");
  }
  // A strictly separating normal certifies both extremality and multiplicity one.
  const Rational top = dot(w.normal, w.point);
  for (auto k : occ) {
    if (k != w.position && dot(w.normal, point_of(k)) >= top) {
      return Check::fail("normal does not separate the point from position " + num(k));
    }
  }
  if (w.confirmation.vector != w.normal) {
    return Check::fail("confirmation uses a different vector");
  }
  return check_vector_witness(p, w.confirmation);
}

Check check_dyck(const Presentation& p, const DyckWitness& w) {
  if (p.generator_count() != 2 || p.relator_count() != 1) {
    return Check::fail("Dyck witness needs two generators and one relator");
  }
  const Word& r = p.relators[0];
  auto q = abelianize(r, 2);
  if (q[0] != 0 || q[1] != 0) {
    return Check::fail("relator is not in the commutator subgroup");
  }
  if (w.rotation >= r.size() || !(rotate(r, w.rotation) == w.rotated)) {
    return Check::fail("recorded rotation differs");
  }
  if (w.x > 1 || w.y != 1 - w.x) {
    return Check::fail("generator roles are invalid");
  }
  // Runs of identical letters, recounted here.
  std::vector<Letter> runs;
  for (const auto& l : w.rotated) {
    if (runs.empty() || !(runs.back() == l)) {
      runs.push_back(l);
    }
  }
  const std::size_t n = runs.size();
  if (n != w.syllables || n < 2 || runs[0].generator != w.x || runs[n - 2].generator != w.x ||
      runs[n - 1].generator != w.y) {
    return Check::fail("syllable condition fails");
  }
  std::int64_t sum = 0;
  std::size_t seen = 0;
  const std::size_t len = static_cast<std::size_t>(
      std::count_if(w.rotated.begin(), w.rotated.end(),
                    [&](const Letter& l) { return l.generator == w.x; }));
  for (const auto& l : w.rotated) {
    if (l.generator != w.x) {
      continue;
    }
    if (++seen == len) {
      break;
    }
    sum += w.inverted ? -l.sign : l.sign;
    if (sum <= 0) {
      return Check::fail("x-shape is not a strong Dyck word");
    }
  }
  return {};
}

Check verify_verdict(const VerifyContext& ctx, const Verdict& v) {
  if (!v.proven()) {
    return {};
  }
  if (ctx.presentation == nullptr) {
    return Check::fail("no presentation to verify against");
  }
  const Presentation& p = *ctx.presentation;
  return std::visit(
      [&](const auto& w) -> Check {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return Check::fail("proven verdict without a witness");
        } else if constexpr (std::is_same_v<T, VectorWitness>) {
          return check_vector_witness(p, w);
        } else if constexpr (std::is_same_v<T, BlockWitness>) {
          return check_block_witness(p, w);
        } else if constexpr (std::is_same_v<T, HullWitness>) {
          return check_hull(p, w);
        } else if constexpr (std::is_same_v<T, DyckWitness>) {
          return check_dyck(p, w);
        } else if constexpr (std::is_same_v<T, DeletionWitness>) {
          return check_deletion_witness(p, ctx.adian, w);
        } else {
          if (ctx.log == nullptr) {
            return Check::fail("LOG witness without a LOG");
          }
          if constexpr (std::is_same_v<T, HowieWitness>) {
            return check_howie(*ctx.log, w);
          } else if constexpr (std::is_same_v<T, DeforestationWitness>) {
            if (!w.target.discrete() || !w.induced) {
              return Check::fail("deforestation must be complete and carry its vector");
            }
            return check_deforestation(*ctx.log, w);
          } else {
            if (!w.blocks) {
              return Check::fail("staged deforestation without its block witness");
            }
            return check_staged(*ctx.log, w);
          }
        }
      },
      v.witness);
}

}  // namespace drtest
