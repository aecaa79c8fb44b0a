#include "doctest.h"

#include "drtest/generate.hpp"
#include "drtest/itest.hpp"
#include "drtest/log.hpp"
#include "drtest/text.hpp"
#include "drtest/verify.hpp"

using namespace drtest;

namespace {

Check verify_log(const Log& g, const Verdict& v) {
  auto p = log_to_presentation(g);
  return verify_verdict({&p, &g, nullptr}, v);
}

}  // namespace

TEST_CASE("forests and trees") {
  UndirectedGraph g{{"a", "b", "c"}, {{0, 1}, {1, 2}}};
  CHECK(is_forest(g));
  CHECK(is_tree(g));
  g.edges.push_back({2, 0});
  CHECK(!is_forest(g));
  CHECK(!is_forest(UndirectedGraph{{"a"}, {{0, 0}}}));
  CHECK(!is_forest(UndirectedGraph{{"a", "b"}, {{0, 1}, {1, 0}}}));
  CHECK(is_forest(UndirectedGraph{{"a", "b"}, {}}));
  CHECK(!is_tree(UndirectedGraph{{"a", "b"}, {}}));
  CHECK(!is_tree(UndirectedGraph{{}, {}}));
}

TEST_CASE("initial and terminal graphs") {
  auto g = parse_log("vertices: a b c d\na c b\nb a c\nd b c\n");
  auto i = initial_graph(g);
  auto t = terminal_graph(g);
  REQUIRE(i.edges.size() == 3);
  CHECK(i.edges[0] == std::pair<std::size_t, std::size_t>{2, 1});  // (label, terminal)
  CHECK(t.edges[0] == std::pair<std::size_t, std::size_t>{0, 2});  // (initial, label)
  CHECK(g.opposite().edges[0].init == 1);
}

TEST_CASE("the bundled LOT") {
  auto g = parse_log("vertices: a b c d\na c b\nb a c\nd b c\n");
  auto v = log_verdict(g);
  CHECK(v.proven());
  CHECK(verify_log(g, v).ok);
}

TEST_CASE("sub-LOG admissibility") {
  auto g = parse_log("vertices: a b c\na b c\n");
  auto s = SubLog::full(g);
  CHECK(s.admissible(g));
  s.vertices[1] = false;  // the label of the kept edge
  CHECK(!s.admissible(g));
  s.edges[0] = false;
  CHECK(s.admissible(g));
  CHECK(s.discrete());
}

TEST_CASE("property: deforestations verify and induce good orders") {
  Rng rng(21);
  int deforested = 0;
  for (int t = 0; t < 800; ++t) {
    auto g = uniform_below(rng, 2) ? random_lot(rng, 1 + uniform_below(rng, 7))
                                   : random_log(rng, 1 + uniform_below(rng, 6),
                                                1 + uniform_below(rng, 6));
    for (auto kind : {DeforestKind::ILT, DeforestKind::TLI}) {
      auto w = deforest(g, kind);
      auto flipped = deforest(g.opposite(), kind == DeforestKind::ILT ? DeforestKind::TLI
                                                                      : DeforestKind::ILT);
      CHECK(w.has_value() == flipped.has_value());
      if (!w) {
        continue;
      }
      ++deforested;
      CHECK(check_deforestation(g, *w).ok);
      CHECK(w->target.discrete());
      auto induced = induced_vector_witness(g, *w);
      REQUIRE(induced.has_value());
      int sign = kind == DeforestKind::ILT ? 1 : -1;
      CHECK(induced->vector == RationalVector(g.vertex_count(), Rational(sign)));
      auto p = log_to_presentation(g);
      CHECK(check_vector_witness(p, *induced).ok);
    }
    auto v = log_verdict(g);
    CHECK(verify_log(g, v).ok);
    if (is_tree(initial_graph(g)) || is_tree(terminal_graph(g))) {
      CHECK(v.proven());
    }
  }
  CHECK(deforested > 100);
}

TEST_CASE("property: weak deforestation") {
  Rng rng(22);
  int staged = 0;
  for (int t = 0; t < 400; ++t) {
    auto g = random_log(rng, 2 + uniform_below(rng, 5), 1 + uniform_below(rng, 6));
    auto weak = is_weakly_deforestable(g);
    bool direct = deforest(g, DeforestKind::ILT) || deforest(g, DeforestKind::TLI);
    if (direct) {
      CHECK(weak.stages.has_value());
    }
    if (!weak.stages) {
      continue;
    }
    for (const auto& s : *weak.stages) {
      CHECK(check_deforestation(g, s).ok);
    }
    if (weak.stages->size() > 1) {
      ++staged;
      auto v = log_verdict(g);
      CHECK(v.status == Status::ProvenDR);
      CHECK(verify_log(g, v).ok);
    }
  }
  MESSAGE("multi-stage instances: " << staged);
}

TEST_CASE("a checker rejects tampered witnesses") {
  auto g = parse_log("vertices: a b c\na b c\nc a b\n");
  auto w = deforest(g, DeforestKind::ILT);
  REQUIRE(w.has_value());
  auto bad = *w;
  bad.steps.pop_back();
  CHECK(!check_deforestation(g, bad).ok);
  auto wrong_vertex = *w;
  wrong_vertex.steps[0].vertex = (wrong_vertex.steps[0].vertex + 1) % g.vertex_count();
  CHECK(!check_deforestation(g, wrong_vertex).ok);
  CHECK(check_howie(g, HowieWitness{true}).ok == is_tree(initial_graph(g)));
  CHECK(check_howie(g, HowieWitness{false}).ok == is_tree(terminal_graph(g)));
}
