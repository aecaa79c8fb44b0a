#include "drtest/adian.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "drtest/itest.hpp"

namespace drtest {

namespace {

// First position (1-based) of generator g in w, counted from the left or
// from the right; 0 when absent.
std::size_t first_position(const Word& w, std::size_t g, bool from_right) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    std::size_t idx = from_right ? w.size() - 1 - k : k;
    if (w[idx].generator == g) {
      return k + 1;
    }
  }
  return 0;
}

LabeledEdgeGraph side_graph(const AdianPresentation& a, bool right) {
  a.validate();
  LabeledEdgeGraph out{a.generators, {}};
  for (std::size_t j = 0; j < a.relations.size(); ++j) {
    const auto& rel = a.relations[j];
    const auto& u = right ? rel.lhs[rel.lhs.size() - 1] : rel.lhs[0];
    const auto& v = right ? rel.rhs[rel.rhs.size() - 1] : rel.rhs[0];
    out.edges.push_back({u.generator, v.generator, j, {}});
  }
  for (std::size_t g = 0; g < a.generators.size(); ++g) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& rel : a.relations) {
      for (const Word* w : {&rel.lhs, &rel.rhs}) {
        auto k = first_position(*w, g, right);
        if (k != 0) {
          best = std::min(best, k);
        }
      }
    }
    for (std::size_t j = 0; j < a.relations.size(); ++j) {
      const auto& rel = a.relations[j];
      for (const Word* w : {&rel.lhs, &rel.rhs}) {
        if (first_position(*w, g, right) == best) {
          out.edges[j].labels.push_back(g);
        }
      }
    }
  }
  return out;
}

std::optional<VectorWitness> induced(const Presentation& p, const RationalVector& v,
                                     const std::vector<Deletion>& steps) {
  std::vector<std::size_t> cols;
  std::vector<std::size_t> rows;
  for (const auto& d : steps) {
    cols.push_back(d.edge);
    rows.push_back(d.generator);
  }
  auto good = goodness_for_orders(weight_matrix(p, v), cols, rows);
  if (!good) {
    return std::nullopt;
  }
  return VectorWitness{v, std::move(*good)};
}

}  // namespace

LabeledEdgeGraph left_graph(const AdianPresentation& a) { return side_graph(a, false); }

LabeledEdgeGraph right_graph(const AdianPresentation& a) { return side_graph(a, true); }

std::optional<std::vector<Deletion>> discretize(const LabeledEdgeGraph& g) {
  std::map<std::size_t, std::size_t> multiplicity;
  for (const auto& e : g.edges) {
    for (auto x : e.labels) {
      ++multiplicity[x];
    }
  }
  std::vector<bool> alive(g.edges.size(), true);
  std::vector<Deletion> steps;
  for (std::size_t round = 0; round < g.edges.size(); ++round) {
    bool deleted = false;
    for (std::size_t e = 0; e < g.edges.size() && !deleted; ++e) {
      if (!alive[e]) {
        continue;
      }
      for (auto x : g.edges[e].labels) {  // ascending, so the first hit is the lowest
        if (multiplicity[x] == 1) {
          steps.push_back({e, x});
          alive[e] = false;
          for (auto y : g.edges[e].labels) {
            --multiplicity[y];
          }
          deleted = true;
          break;
        }
      }
    }
    if (!deleted) {
      return std::nullopt;
    }
  }
  return steps;
}

Verdict adian_verdict(const AdianPresentation& a) {
  a.validate();
  Verdict out;
  out.test = "adian";
  for (std::size_t j = 0; j < a.relations.size(); ++j) {
    if (a.relations[j].lhs.size() != a.relations[j].rhs.size()) {
      out.status = Status::Inapplicable;
      out.note = "relation " + std::to_string(j + 1) + " has sides of different lengths";
      return out;
    }
  }
  auto p = a.to_presentation();
  for (auto side : {Side::Left, Side::Right}) {
    auto graph = side == Side::Left ? left_graph(a) : right_graph(a);
    auto steps = discretize(graph);
    if (!steps) {
      continue;
    }
    RationalVector v(a.generators.size(), Rational(side == Side::Left ? 1 : -1));
    DeletionWitness w{side, false, *steps, induced(p, v, *steps)};
    const char* name = side == Side::Left ? "left" : "right";
    if (!w.induced) {
      // The deletion order did not induce good orders for this vector; report
      // the discretization but do not claim anything from it.
      out.note += std::string(name) + " graph discretizes but v = " + to_string(v) +
                  " does not verify; ";
      continue;
    }
    out.status = Status::ProvenDR;
    out.note += std::string(name) + " graph is discretizable";
    out.witness = std::move(w);
    return out;
  }
  out.status = Status::Inconclusive;
  out.note += "neither labeled graph is discretizable";
  return out;
}

std::optional<LabeledEdgeGraph> generalized_left_graph(const Presentation& p) {
  p.validate();
  for (const auto& r : p.relators) {
    if (total_exponent(r) != 0) {
      return std::nullopt;
    }
    std::int64_t e = 0;
    for (std::size_t k = r.size(); k-- > 1;) {
      e += r[k].sign;
      if (e >= 0) {
        return std::nullopt;
      }
    }
  }
  LabeledEdgeGraph out{p.generators, {}};
  // best[g] = maximum total exponent of s(k, r_j) over occurrences of g.
  std::map<std::size_t, std::int64_t> best;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> per_relator;
  for (std::size_t j = 0; j < p.relator_count(); ++j) {
    const Word& r = p.relators[j];
    out.edges.push_back({r[0].generator, r[r.size() - 1].generator, j, {}});
    per_relator.emplace_back();
    for (std::size_t k = 1; k <= r.size(); ++k) {
      std::int64_t e = total_exponent(suffix_s(r, k));
      std::size_t g = r.at(k).generator;
      per_relator.back().emplace_back(g, e);
      auto it = best.find(g);
      if (it == best.end() || e > it->second) {
        best[g] = e;
      }
    }
  }
  for (std::size_t j = 0; j < per_relator.size(); ++j) {
    for (const auto& [g, e] : per_relator[j]) {
      if (e == best[g]) {
        out.edges[j].labels.push_back(g);
      }
    }
    std::sort(out.edges[j].labels.begin(), out.edges[j].labels.end());
  }
  return out;
}

Verdict generalized_left_verdict(const Presentation& p) {
  Verdict out;
  out.test = "generalized-left-graph";
  auto graph = generalized_left_graph(p);
  if (!graph) {
    out.status = Status::Inapplicable;
    out.note = "some relator has nonzero total exponent or a nonnegative proper final segment";
    return out;
  }
  auto steps = discretize(*graph);
  if (!steps) {
    out.status = Status::Inconclusive;
    out.note = "generalized left graph is not discretizable";
    return out;
  }
  out.status = Status::ProvenAspherical;
  out.note = "generalized left graph is discretizable";
  out.witness = DeletionWitness{Side::Left, true, *steps, std::nullopt};
  return out;
}

}  // namespace drtest
