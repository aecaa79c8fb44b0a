#include "drtest/dot.hpp"

#include <sstream>

namespace drtest {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out + "\"";
}

void vertices(std::ostringstream& out, const std::vector<std::string>& names) {
  for (const auto& n : names) {
    out << "  " << quote(n) << ";\n";
  }
}

}  // namespace

std::string to_dot(const Log& g) {
  std::ostringstream out;
  out << "digraph log {\n";
  vertices(out, g.vertices);
  for (const auto& e : g.edges) {
    out << "  " << quote(g.vertices[e.init]) << " -> " << quote(g.vertices[e.terminal])
        << " [label=" << quote(g.vertices[e.label]) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const UndirectedGraph& g) {
  std::ostringstream out;
  out << "graph g {\n";
  vertices(out, g.vertices);
  for (const auto& [a, b] : g.edges) {
    out << "  " << quote(g.vertices[a]) << " -- " << quote(g.vertices[b]) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const LabeledEdgeGraph& g) {
  std::ostringstream out;
  out << "graph labeled {\n";
  vertices(out, g.vertices);
  for (const auto& e : g.edges) {
    // Drop one copy of each endpoint; what is left is the nontrivial part.
    auto labels = e.labels;
    for (auto end : {e.a, e.b}) {
      for (auto it = labels.begin(); it != labels.end(); ++it) {
        if (*it == end) {
          labels.erase(it);
          break;
        }
      }
      if (e.a == e.b) {
        break;
      }
    }
    std::string text;
    for (auto x : labels) {
      text += (text.empty() ? "" : ",") + g.vertices[x];
    }
    out << "  " << quote(g.vertices[e.a]) << " -- " << quote(g.vertices[e.b])
        << " [label=" << quote(text) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const WhiteheadGraph& g, const Presentation& p) {
  std::ostringstream out;
  out << "graph whitehead {\n";
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    out << "  " << quote(wh_vertex_name(p, v)) << ";\n";
  }
  for (const auto& e : g.edges) {
    out << "  " << quote(wh_vertex_name(p, e.a)) << " -- " << quote(wh_vertex_name(p, e.b))
        << " [label=" << quote("r" + std::to_string(e.relator + 1) + "." + std::to_string(e.corner + 1))
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace drtest
