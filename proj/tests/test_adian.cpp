#include "doctest.h"

#include "drtest/adian.hpp"
#include "drtest/generate.hpp"
#include "drtest/itest.hpp"
#include "drtest/text.hpp"
#include "drtest/verify.hpp"

using namespace drtest;

namespace {

AdianPresentation adian(const char* text) {
  auto a = detect_adian(parse_presentation(text));
  REQUIRE(a.has_value());
  return *a;
}

}  // namespace

TEST_CASE("left and right graphs") {
  auto a = adian("x, y, z | x y = y z ; x^2 = z y");
  auto l = left_graph(a);
  REQUIRE(l.edges.size() == 2);
  CHECK(l.edges[0].a == 0);
  CHECK(l.edges[0].b == 1);
  // max over both sides of the first-position-from-the-left: x and y at 1.
  CHECK(l.edges[0].labels == std::vector<std::size_t>{0, 1});
  CHECK(l.edges[1].labels == std::vector<std::size_t>{0, 2});
  auto r = right_graph(a);
  CHECK(r.edges[0].a == 1);
  CHECK(r.edges[0].b == 2);
}

TEST_CASE("discretization replays") {
  auto a = adian("x, y, z | x y = y z ; x^2 = z y");
  for (const auto& g : {left_graph(a), right_graph(a)}) {
    auto steps = discretize(g);
    if (steps) {
      CHECK(check_deletions(g, *steps).ok);
      CHECK(steps->size() == g.edges.size());
    }
  }
  LabeledEdgeGraph stuck{{"x", "y"}, {{0, 1, 0, {0, 1}}, {0, 1, 1, {0, 1}}}};
  CHECK(!discretize(stuck).has_value());
  LabeledEdgeGraph easy{{"x", "y"}, {{0, 1, 0, {0, 1}}}};
  auto s = discretize(easy);
  REQUIRE(s.has_value());
  CHECK((*s)[0].generator == 0);
  CHECK(!check_deletions(easy, {{0, 0}, {0, 0}}).ok);
}

TEST_CASE("adian verdicts") {
  auto bad = parse_presentation("x, y | x^2 = y");
  auto a = detect_adian(bad);
  REQUIRE(a.has_value());
  CHECK(adian_verdict(*a).status == Status::Inapplicable);

  auto p = parse_presentation("x, y, z | x y = y z");
  auto good = detect_adian(p);
  REQUIRE(good.has_value());
  auto v = adian_verdict(*good);
  CHECK(v.status == Status::ProvenDR);
  CHECK(verify_verdict({&p, nullptr, &*good}, v).ok);
}

TEST_CASE("property: adian witnesses verify") {
  Rng rng(31);
  int proven = 0;
  for (int t = 0; t < 400; ++t) {
    auto a = random_adian(rng, 2 + uniform_below(rng, 4), 1 + uniform_below(rng, 3), 4);
    auto p = a.to_presentation();
    auto v = adian_verdict(a);
    CHECK(v.status != Status::ProvenAspherical);
    if (v.status == Status::ProvenDR) {
      ++proven;
      CHECK(verify_verdict({&p, nullptr, &a}, v).ok);
      const auto& w = std::get<DeletionWitness>(v.witness);
      REQUIRE(w.induced.has_value());
      CHECK(itest_fixed(p, w.induced->vector).status == Status::ProvenDR);
      CHECK(check_deletion_witness(p, &a, w).ok);
    }
  }
  CHECK(proven > 0);
}

TEST_CASE("generalized left graph") {
  // Total exponent zero, and every proper final segment has negative sum.
  auto p = parse_presentation("x, y, z | x y z^-1 y^-1");
  auto g = generalized_left_graph(p);
  REQUIRE(g.has_value());
  CHECK(g->edges[0].a == 0);
  CHECK(g->edges[0].b == 1);
  auto v = generalized_left_verdict(p);
  CHECK(v.status != Status::ProvenDR);
  if (v.proven()) {
    CHECK(verify_verdict({&p, nullptr, nullptr}, v).ok);
  }
  CHECK(!generalized_left_graph(parse_presentation("x | x^2")).has_value());
  CHECK(!generalized_left_graph(parse_presentation("x, y | y^-1 x y x^-1")).has_value());
  CHECK(generalized_left_graph(parse_presentation("x, y | x y x^-1 y^-1")).has_value());
}
