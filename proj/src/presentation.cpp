#include "drtest/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace drtest {

namespace {

void check_unique_names(const std::vector<std::string>& names, const char* what) {
  std::set<std::string> seen;
  for (const auto& name : names) {
    if (name.empty()) {
      throw ValidationError(std::string("empty ") + what + " name");
    }
    if (!seen.insert(name).second) {
      throw ValidationError(std::string("duplicate ") + what + " '" + name + "'");
    }
  }
}

void check_word(const Word& w, std::size_t n, std::size_t index) {
  for (const auto& l : w) {
    if (l.generator >= n) {
      throw ValidationError("relator " + std::to_string(index + 1) +
                            " uses an undeclared generator");
    }
    if (l.sign != 1 && l.sign != -1) {
      throw ValidationError("relator " + std::to_string(index + 1) + " has a letter sign not +-1");
    }
  }
}

}  // namespace

void Presentation::validate() const {
  check_unique_names(generators, "generator");
  for (std::size_t j = 0; j < relators.size(); ++j) {
    if (relators[j].empty()) {
      throw ValidationError("relator " + std::to_string(j + 1) + " is empty");
    }
    check_word(relators[j], generators.size(), j);
  }
}

Presentation reorder(const Presentation& p, const std::vector<std::size_t>& generator_order,
                     const std::vector<std::size_t>& relator_order) {
  const std::size_t n = p.generator_count();
  if (generator_order.size() != n || relator_order.size() != p.relator_count()) {
    throw std::invalid_argument("reorder: permutation sizes do not match the presentation");
  }
  std::vector<std::size_t> new_index(n, n);
  for (std::size_t t = 0; t < n; ++t) {
    if (generator_order[t] >= n || new_index[generator_order[t]] != n) {
      throw std::invalid_argument("reorder: generator order is not a permutation");
    }
    new_index[generator_order[t]] = t;
  }
  std::vector<bool> used(p.relator_count(), false);
  Presentation out;
  for (auto g : generator_order) {
    out.generators.push_back(p.generators[g]);
  }
  for (auto j : relator_order) {
    if (j >= p.relator_count() || used[j]) {
      throw std::invalid_argument("reorder: relator order is not a permutation");
    }
    used[j] = true;
    Word w;
    for (const auto& l : p.relators[j]) {
      w.push_back({new_index[l.generator], l.sign});
    }
    out.relators.push_back(std::move(w));
  }
  return out;
}

Presentation subpresentation(const Presentation& p, std::uint64_t relator_mask) {
  Presentation out;
  out.generators = p.generators;
  for (std::size_t j = 0; j < p.relator_count(); ++j) {
    if ((relator_mask >> j) & 1U) {
      out.relators.push_back(p.relators[j]);
    }
  }
  return out;
}

Subpresentations::Subpresentations(const Presentation& p) : p_(&p) {
  if (p.relator_count() >= 64) {
    throw std::invalid_argument("subpresentations: at most 63 relators");
  }
  end_ = std::uint64_t{1} << p.relator_count();
}

void Log::validate() const {
  check_unique_names(vertices, "vertex");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& edge = edges[e];
    if (edge.init >= vertices.size() || edge.terminal >= vertices.size() ||
        edge.label >= vertices.size()) {
      throw ValidationError("edge " + std::to_string(e + 1) + " references an undeclared vertex");
    }
  }
}

Log Log::opposite() const {
  Log out = *this;
  for (auto& e : out.edges) {
    std::swap(e.init, e.terminal);
  }
  return out;
}

bool is_lot(const Log& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0 || g.edge_count() + 1 != n) {
    return false;
  }
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& e : g.edges) {
    auto a = find(e.init);
    auto b = find(e.terminal);
    if (a == b) {
      return false;
    }
    parent[a] = b;
  }
  return true;
}

SubLog SubLog::full(const Log& g) {
  return {std::vector<bool>(g.vertex_count(), true), std::vector<bool>(g.edge_count(), true)};
}

bool SubLog::admissible(const Log& g) const {
  if (vertices.size() != g.vertex_count() || edges.size() != g.edge_count()) {
    return false;
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!edges[e]) {
      continue;
    }
    const auto& edge = g.edges[e];
    if (!vertices[edge.init] || !vertices[edge.terminal] || !vertices[edge.label]) {
      return false;
    }
  }
  return true;
}

std::size_t SubLog::vertex_count() const {
  return static_cast<std::size_t>(std::count(vertices.begin(), vertices.end(), true));
}

std::size_t SubLog::edge_count() const {
  return static_cast<std::size_t>(std::count(edges.begin(), edges.end(), true));
}

Presentation log_to_presentation(const Log& g) {
  Presentation p;
  p.generators = g.vertices;
  for (const auto& e : g.edges) {
    p.relators.push_back(Word{pos(e.init), pos(e.label), neg(e.terminal), neg(e.label)});
  }
  return p;
}

void AdianPresentation::validate() const {
  check_unique_names(generators, "generator");
  for (std::size_t j = 0; j < relations.size(); ++j) {
    const auto& rel = relations[j];
    if (!is_positive(rel.lhs) || !is_positive(rel.rhs)) {
      throw ValidationError("relation " + std::to_string(j + 1) +
                            " is not an equation of nontrivial positive words");
    }
    check_word(rel.lhs, generators.size(), j);
    check_word(rel.rhs, generators.size(), j);
  }
}

Presentation AdianPresentation::to_presentation() const {
  Presentation p;
  p.generators = generators;
  for (const auto& rel : relations) {
    p.relators.push_back(rel.lhs * rel.rhs.inverse());
  }
  return p;
}

std::optional<AdianPresentation> detect_adian(const Presentation& p) {
  AdianPresentation out;
  out.generators = p.generators;
  for (const auto& r : p.relators) {
    std::size_t split = 0;
    while (split < r.size() && r[split].sign > 0) {
      ++split;
    }
    if (split == 0 || split == r.size()) {
      return std::nullopt;
    }
    for (std::size_t k = split; k < r.size(); ++k) {
      if (r[k].sign > 0) {
        return std::nullopt;
      }
    }
    Word lhs(std::vector<Letter>(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(split)));
    Word tail_part(std::vector<Letter>(r.begin() + static_cast<std::ptrdiff_t>(split), r.end()));
    out.relations.push_back({std::move(lhs), tail_part.inverse()});
  }
  return out;
}

}  // namespace drtest
