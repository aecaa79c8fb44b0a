#include "drtest/report.hpp"

#include <algorithm>
#include <sstream>

#include "drtest/text.hpp"

namespace drtest {

namespace {

Json one_based(const std::vector<std::size_t>& xs) {
  Json out = Json::array();
  for (auto x : xs) {
    out.push_back(x + 1);
  }
  return out;
}

Json names(const std::vector<std::size_t>& xs, const std::vector<std::string>& table) {
  Json out = Json::array();
  for (auto x : xs) {
    out.push_back(table.at(x));
  }
  return out;
}

Json goodness_json(const GoodnessWitness& w) {
  Json pivots = Json::array();
  for (const auto& pv : w.pivots) {
    pivots.push_back({{"row", pv.row + 1},
                      {"column", pv.col + 1},
                      {"occurrence", pv.occurrence + 1},
                      {"value", to_string(pv.value)}});
  }
  return {{"column_order", one_based(w.column_order)},
          {"row_order", one_based(w.row_order)},
          {"pivots", pivots}};
}

Json vector_witness_json(const VectorWitness& w) {
  return {{"vector", to_json(w.vector)}, {"goodness", goodness_json(w.goodness)}};
}

Json sublog_json(const SubLog& s, const Presentation& p) {
  Json vertices = Json::array();
  Json edges = Json::array();
  for (std::size_t v = 0; v < s.vertices.size(); ++v) {
    if (s.vertices[v]) {
      vertices.push_back(p.generators.at(v));
    }
  }
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    if (s.edges[e]) {
      edges.push_back(e + 1);
    }
  }
  return {{"vertices", vertices}, {"edges", edges}};
}

Json deforestation_json(const DeforestationWitness& w, const Presentation& p) {
  const bool ilt = w.kind == DeforestKind::ILT;
  Json steps = Json::array();
  for (const auto& s : w.steps) {
    const char* clause = s.clause == Clause::IL ? (ilt ? "IL" : "TL") : (ilt ? "T" : "I");
    steps.push_back({{"edge", s.edge + 1}, {"vertex", p.generators.at(s.vertex)}, {"clause", clause}});
  }
  Json out = {{"type", "deforestation"},
              {"kind", ilt ? "IL/T" : "TL/I"},
              {"source", sublog_json(w.source, p)},
              {"target", sublog_json(w.target, p)},
              {"steps", steps}};
  if (w.induced) {
    out["induced"] = vector_witness_json(*w.induced);
  }
  return out;
}

Json block_json(const BlockWitness& w, const Presentation& p) {
  Json vectors = Json::array();
  Json goodness = Json::array();
  for (const auto& v : w.vectors) {
    vectors.push_back(to_json(v));
  }
  for (const auto& g : w.goodness) {
    goodness.push_back(goodness_json(g));
  }
  return {{"type", "blocks"},
          {"generator_order", names(w.blocking.generator_order, p.generators)},
          {"relator_order", one_based(w.blocking.relator_order)},
          {"generator_cuts", w.blocking.blocks.generator_cuts},
          {"relator_cuts", w.blocking.blocks.relator_cuts},
          {"vectors", vectors},
          {"goodness", goodness}};
}

}  // namespace

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) {
    out.push_back(to_string(x));
  }
  return out;
}

Json to_json(const Presentation& p) {
  Json relators = Json::array();
  for (const auto& r : p.relators) {
    relators.push_back(format_word(r, p.generators));
  }
  return {{"generators", p.generators}, {"relators", relators}};
}

Json to_json(const Log& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"initial", g.vertices.at(e.init)},
                     {"label", g.vertices.at(e.label)},
                     {"terminal", g.vertices.at(e.terminal)}});
  }
  return {{"vertices", g.vertices}, {"edges", edges}};
}

Json witness_json(const Witness& witness, const Presentation& p) {
  return std::visit(
      [&](const auto& w) -> Json {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, VectorWitness>) {
          Json out = vector_witness_json(w);
          out["type"] = "vector";
          return out;
        } else if constexpr (std::is_same_v<T, BlockWitness>) {
          return block_json(w, p);
        } else if constexpr (std::is_same_v<T, HowieWitness>) {
          return {{"type", "howie"}, {"graph", w.initial_graph ? "initial" : "terminal"}};
        } else if constexpr (std::is_same_v<T, DeforestationWitness>) {
          return deforestation_json(w, p);
        } else if constexpr (std::is_same_v<T, StagedDeforestationWitness>) {
          Json stages = Json::array();
          for (const auto& s : w.stages) {
            stages.push_back(deforestation_json(s, p));
          }
          Json out = {{"type", "staged-deforestation"}, {"stages", stages}};
          if (w.blocks) {
            out["blocks"] = block_json(*w.blocks, p);
          }
          return out;
        } else if constexpr (std::is_same_v<T, DeletionWitness>) {
          Json steps = Json::array();
          for (const auto& d : w.steps) {
            steps.push_back({{"edge", d.edge + 1}, {"generator", p.generators.at(d.generator)}});
          }
          Json out = {{"type", "deletion"},
                      {"side", w.side == Side::Left ? "left" : "right"},
                      {"generalized", w.generalized},
                      {"steps", steps}};
          if (w.induced) {
            out["induced"] = vector_witness_json(*w.induced);
          }
          return out;
        } else if constexpr (std::is_same_v<T, HullWitness>) {
          Json candidates = Json::array();
          for (const auto& [position, point] : w.candidates) {
            candidates.push_back({{"position", position}, {"point", to_json(point)}});
          }
          return {{"type", "hull"},
                  {"generator", p.generators.at(w.generator)},
                  {"position", w.position},
                  {"point", to_json(w.point)},
                  {"normal", to_json(w.normal)},
                  {"candidates", candidates},
                  {"confirmation", vector_witness_json(w.confirmation)}};
        } else {
          return {{"type", "dyck"},
                  {"rotation", w.rotation + 1},
                  {"x", p.generators.at(w.x)},
                  {"y", p.generators.at(w.y)},
                  {"inverted", w.inverted},
                  {"word", format_word(w.rotated, p.generators)},
                  {"syllables", w.syllables}};
        }
      },
      witness);
}

Json to_json(const WeightTestResult& r) {
  Json out = {{"status", to_string(r.status)}, {"note", r.note}, {"cycles", r.cycle_count}};
  if (r.status == WeightTestStatus::Feasible || r.status == WeightTestStatus::Truncated) {
    out["assignment"] = to_json(r.assignment);
  }
  if (r.status == WeightTestStatus::Infeasible) {
    out["certificate"] = to_json(r.certificate);
  }
  return out;
}

Json to_json(const Report& r, bool with_timing) {
  Json results = Json::array();
  for (const auto& e : r.entries) {
    Json entry = {{"test", e.verdict.test},
                  {"status", to_string(e.verdict.status)},
                  {"note", e.verdict.note}};
    if (e.verdict.status == Status::Inconclusive) {
      entry["reason"] = to_string(e.verdict.reason);
    }
    entry["budget_hit"] = e.budget_hit;
    entry["witness"] = witness_json(e.verdict.witness, r.presentation);
    entry["verified"] = e.verified;
    if (!e.verify_note.empty()) {
      entry["verify_note"] = e.verify_note;
    }
    if (with_timing) {
      entry["time_ms"] = e.milliseconds;
    }
    results.push_back(std::move(entry));
  }
  Json out = {{"tool", "drtest"}, {"version", kVersion}, {"input", r.input}, {"kind", r.kind}};
  out["presentation"] = to_json(r.presentation);
  if (r.log) {
    out["log"] = to_json(*r.log);
  }
  if (r.seed) {
    out["seed"] = *r.seed;
  }
  out["results"] = std::move(results);
  if (r.weight_test) {
    out["weight_test"] = to_json(*r.weight_test);
  }
  return out;
}

std::string format_weight_matrix(const Presentation& p, const WeightMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.rows() + 1,
                                              std::vector<std::string>(m.cols() + 1));
  for (std::size_t j = 0; j < m.cols(); ++j) {
    cells[0][j + 1] = "r" + std::to_string(j + 1);
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    cells[i + 1][0] = p.generators.at(i);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::string s = "{";
      const auto& vals = m.at(i, j).values;
      for (std::size_t t = 0; t < vals.size(); ++t) {
        s += (t ? "," : "") + to_string(vals[t]);
      }
      cells[i + 1][j + 1] = vals.empty() ? "." : s + "}";
    }
  }
  std::vector<std::size_t> width(m.cols() + 1, 0);
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      width[j] = std::max(width[j], row[j].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      line += row[j] + std::string(width[j] - row[j].size() + 2, ' ');
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out << "  " << line << '\n';
  }
  return out.str();
}

std::string format_verdict(const Verdict& v, const Presentation& p) {
  std::ostringstream out;
  out << v.test << ": " << to_string(v.status);
  if (v.status == Status::Inconclusive && v.reason != InconclusiveReason::None) {
    out << " (" << to_string(v.reason) << ")";
  }
  if (!v.note.empty()) {
    out << " - " << v.note;
  }
  out << '\n';
  auto orders = [&](const GoodnessWitness& g) {
    std::string cols;
    std::string rows;
    for (std::size_t k = 0; k < g.column_order.size(); ++k) {
      cols += (k ? " " : "") + std::to_string(g.column_order[k] + 1);
      rows += (k ? " " : "") + std::to_string(g.row_order[k] + 1);
    }
    return "columns " + cols + "; rows " + rows;
  };
  std::visit(
      [&](const auto& w) {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, VectorWitness>) {
          out << "  v = " << to_string(w.vector) << ", " << orders(w.goodness) << '\n';
          out << format_weight_matrix(p, weight_matrix(p, w.vector));
        } else if constexpr (std::is_same_v<T, BlockWitness>) {
          for (std::size_t l = 0; l < w.vectors.size(); ++l) {
            out << "  block " << l + 1 << ": v = " << to_string(w.vectors[l]) << ", "
                << orders(w.goodness[l]) << '\n';
          }
        } else if constexpr (std::is_same_v<T, DeforestationWitness>) {
          for (const auto& s : w.steps) {
            out << "  remove edge " << s.edge + 1 << " with vertex " << p.generators.at(s.vertex)
                << '\n';
          }
        } else if constexpr (std::is_same_v<T, StagedDeforestationWitness>) {
          for (std::size_t s = 0; s < w.stages.size(); ++s) {
            out << "  stage " << s + 1 << ": "
                << (w.stages[s].kind == DeforestKind::ILT ? "IL/T" : "TL/I") << ", "
                << w.stages[s].steps.size() << " edges\n";
          }
        } else if constexpr (std::is_same_v<T, DeletionWitness>) {
          for (const auto& d : w.steps) {
            out << "  delete edge " << d.edge + 1 << " via " << p.generators.at(d.generator)
                << '\n';
          }
        } else if constexpr (std::is_same_v<T, HullWitness>) {
          out << "  point " << to_string(w.point) << ", normal " << to_string(w.normal) << '\n';
        } else if constexpr (std::is_same_v<T, DyckWitness>) {
          out << "  w' = " << format_word(w.rotated, p.generators) << '\n';
        }
      },
      v.witness);
  return out.str();
}

std::string format_report(const Report& r) {
  std::ostringstream out;
  out << r.input << " (" << r.kind << ")\n";
  out << "  " << format_presentation(r.presentation);
  for (const auto& e : r.entries) {
    out << format_verdict(e.verdict, r.presentation);
    if (!e.verified) {
      out << "  WITNESS REJECTED: " << e.verify_note << '\n';
    }
  }
  if (r.weight_test) {
    out << "weight test: " << to_string(r.weight_test->status) << " - " << r.weight_test->note
        << '\n';
  }
  return out.str();
}

}  // namespace drtest
