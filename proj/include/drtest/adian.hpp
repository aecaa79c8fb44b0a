#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "drtest/presentation.hpp"
#include "drtest/witness.hpp"

namespace drtest {

struct LabeledEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t relation = 0;
  std::vector<std::size_t> labels;  // multiset, ascending, trivial labels included
};

struct LabeledEdgeGraph {
  std::vector<std::string> vertices;
  std::vector<LabeledEdge> edges;
};

/// Edge j joins the first letters of U_j and V_j. A generator labels edge j
/// once for each of U_j, V_j in which its first occurrence is at the
/// smallest position over all words.
LabeledEdgeGraph left_graph(const AdianPresentation& a);

/// Mirror image: last letters, positions counted from the right.
LabeledEdgeGraph right_graph(const AdianPresentation& a);

/// Repeatedly deletes the lowest-indexed edge carrying a label of total
/// multiplicity one (witness: the lowest such generator). Deleting edges never
/// raises a multiplicity, so getting stuck means no deletion order exists.
std::optional<std::vector<Deletion>> discretize(const LabeledEdgeGraph& g);

/// Inapplicable unless len(U_j) = len(V_j) for every j. A discretizable left
/// graph gives v = (1,...,1), a discretizable right graph v = (-1,...,-1);
/// the deletion order induces the column and row orders.
Verdict adian_verdict(const AdianPresentation& a);

/// Present when every relator has total exponent 0 and every proper final
/// segment has negative total exponent. Edge j joins the first and last
/// letters of r_j; x labels edge j once per occurrence of x in r_j where the
/// total exponent of s(k, r_j) reaches the maximum over all occurrences of x.
std::optional<LabeledEdgeGraph> generalized_left_graph(const Presentation& p);

/// ProvenAspherical when the generalized left graph exists and discretizes.
Verdict generalized_left_verdict(const Presentation& p);

}  // namespace drtest
