#include <algorithm>

#include "degbound/graphs.hpp"
#include "degbound/oracle.hpp"
#include "doctest.h"
#include "test_oracles.hpp"

using namespace degbound;

namespace {
Rational rat(long long num, long long den = 1) { return make_rational(num, den); }
}  // namespace

TEST_CASE("degree sequences of small graphs") {
  LabelledGraph triangle = LabelledGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(degree_sequence_of(triangle).degrees == std::vector<int>{2, 2, 2});
  CHECK(edge_count(triangle) == 3);

  LabelledGraph empty = LabelledGraph::empty(4);
  CHECK(degree_sequence_of(empty).degrees == std::vector<int>{0, 0, 0, 0});

  BipartiteGraph bip = BipartiteGraph::from_edges(2, 2, {{0, 0}, {0, 1}, {1, 0}});
  auto [s, t] = degree_sequence_of(bip);
  CHECK(s.degrees == std::vector<int>{2, 1});
  CHECK(t.degrees == std::vector<int>{2, 1});
  CHECK(edge_count(bip) == 3);
}

TEST_CASE("edge count equals half the degree sum") {
  LabelledGraph g = LabelledGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
  DegreeSequence d = degree_sequence_of(g);
  CHECK(d.degrees == std::vector<int>{3, 2, 2, 1});
  CHECK(2 * edge_count(g) == d.sum());
}

TEST_CASE("graph construction rejects loops, duplicates and bad endpoints") {
  CHECK_THROWS_AS(LabelledGraph::from_edges(3, {{1, 1}}), Error);
  CHECK_THROWS_AS(LabelledGraph::from_edges(3, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(LabelledGraph::from_edges(3, {{0, 3}}), Error);
  CHECK_THROWS_AS(BipartiteGraph::from_edges(2, 2, {{0, 2}}), Error);
  CHECK_THROWS_AS(BipartiteGraph::from_edges(2, 2, {{0, 0}, {0, 0}}), Error);
}

TEST_CASE("boundary vertices") {
  CHECK(boundary(LabelledGraph::from_edges(4, {{0, 1}})) == std::vector<int>{0, 1});
  CHECK(boundary(LabelledGraph::empty(4)).empty());
  // perfect matching in a complete bipartite host touches every vertex
  BipartiteGraph matching = BipartiteGraph::from_edges(3, 3, {{0, 0}, {1, 1}, {2, 2}});
  auto [left, right] = boundary(matching);
  CHECK(left == std::vector<int>{0, 1, 2});
  CHECK(right == std::vector<int>{0, 1, 2});
}

TEST_CASE("restricted max degree") {
  DegreeSequence g({5, 1, 1, 1});
  CHECK(restricted_max_degree(g, LabelledGraph::from_edges(4, {{1, 2}})) == 1);
  LabelledGraph spanning = LabelledGraph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK(restricted_max_degree(g, spanning) == g.max_degree());
  CHECK_THROWS_AS(restricted_max_degree(g, LabelledGraph::empty(4)), Error);

  BipartiteGraph bx = BipartiteGraph::from_edges(2, 3, {{1, 0}});
  DegreeSequence s({4, 2}, Part::bipartite_left);
  DegreeSequence t({7, 1, 1}, Part::bipartite_right);
  CHECK(restricted_max_degree(s, bx) == 2);
  CHECK(restricted_max_degree(t, bx) == 7);
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(5, 2) == 20);
  CHECK(falling_factorial(5, 0) == 1);
  CHECK(falling_factorial(3, 4) == 0);
  CHECK(falling_factorial(-2, 2) == 6);
}

TEST_CASE("conditioning reduction rewrites the instance") {
  SUBCASE("empty conditioning graph is the identity") {
    DegreeSequence d({1, 1, 1, 1});
    LabelledGraph x = LabelledGraph::from_edges(4, {{0, 1}});
    ProblemInstance inst = reduce_conditioning(d, LabelledGraph::empty(4), LabelledGraph::empty(4), x);
    CHECK(inst.degrees == d);
    CHECK(inst.required == x);
    CHECK(inst.forbidden.edge_count() == 0);
  }
  SUBCASE("conditioning edges move into the forbidden set") {
    DegreeSequence d({1, 1, 1, 1});
    LabelledGraph h = LabelledGraph::from_edges(4, {{0, 1}});
    ProblemInstance inst = reduce_conditioning(d, h, LabelledGraph::empty(4), h);
    CHECK(inst.degrees.degrees == std::vector<int>{0, 0, 1, 1});
    CHECK(inst.required.edge_count() == 0);
    CHECK(inst.forbidden == h);
  }
  SUBCASE("error paths") {
    DegreeSequence d({0, 1, 1, 0});
    LabelledGraph h = LabelledGraph::from_edges(4, {{0, 1}});
    CHECK_THROWS_AS(reduce_conditioning(d, h, LabelledGraph::empty(4), h), Error);  // negative degree
    DegreeSequence ok({1, 1, 1, 1});
    LabelledGraph x = LabelledGraph::from_edges(4, {{0, 1}});
    LabelledGraph l = LabelledGraph::from_edges(4, {{0, 1}});
    CHECK_THROWS_AS(reduce_conditioning(ok, LabelledGraph::empty(4), l, x), Error);  // overlap
  }
}

TEST_CASE("conditioning reduction preserves exact probabilities") {
  // Both sides computed by enumeration on every graphical sequence with
  // n <= 6, small targets, H inside X.
  int instances = 0;
  for (int n = 4; n <= 6; ++n) {
    const std::vector<std::vector<Edge>> x_shapes = {
        {{0, 1}, {2, 3}}, {{0, 1}, {0, 2}}, {{0, 1}}};
    for (const auto& degs : canonical_degree_sequences(n, 8)) {
      DegreeSequence d(degs);
      for (const auto& xe : x_shapes) {
        LabelledGraph x = LabelledGraph::from_edges(n, xe);
        LabelledGraph h = LabelledGraph::from_edges(n, {xe[0]});
        LabelledGraph l = LabelledGraph::from_edges(n, {{1, 2}});
        if (x.intersects(l) || h.intersects(l)) continue;
        DegreeSequence xdeg = degree_sequence_of(x);
        bool fits = true;
        for (int i = 0; i < n; ++i) fits = fits && xdeg[i] <= d[i];
        if (!fits) continue;

        ProblemInstance base{d, h, l};
        const long long denom = testing::brute_force_class_count(base);
        if (denom == 0) continue;

        Rational direct = exact_probability(base, x, EventKind::contains);
        ProblemInstance reduced = reduce_conditioning(d, h, l, x);
        Rational via_reduction = exact_probability(
            ProblemInstance{reduced.degrees, LabelledGraph::empty(n), reduced.forbidden},
            reduced.required, EventKind::contains);
        CHECK(direct == via_reduction);
        ++instances;
      }
    }
  }
  CHECK(instances > 50);
}

TEST_CASE("instance validation") {
  DegreeSequence d({1, 1});
  ProblemInstance bad{d, LabelledGraph::from_edges(2, {{0, 1}}), LabelledGraph::from_edges(2, {{0, 1}})};
  CHECK_THROWS_AS(bad.validate(), Error);

  BipartiteInstance unbalanced{DegreeSequence({2}, Part::bipartite_left),
                               DegreeSequence({1}, Part::bipartite_right), BipartiteGraph::empty(1, 1),
                               BipartiteGraph::empty(1, 1)};
  CHECK_THROWS_AS(unbalanced.validate(), Error);
}

TEST_CASE("rational formatting") {
  CHECK(rational_to_string(rat(7, 207)) == "7/207");
  CHECK(rational_to_string(rat(4, 2)) == "2");
  CHECK(rational_to_decimal(rat(1, 5)) == "0.2");
  CHECK(rational_to_decimal(rat(1, 3)) == "0.333333333333");
  CHECK(rational_to_decimal(rat(200, 147)) == "1.36054421769");
  CHECK(rational_to_decimal(rat(0)) == "0");
  CHECK(rational_to_decimal(rat(-1, 3)) == "-0.333333333333");
  CHECK(rational_to_decimal(make_rational(1, 100000000)) == "1e-8");
  CHECK(rational_from_string("7/207") == rat(7, 207));
  CHECK(rational_from_string("-3") == rat(-3));
  CHECK_THROWS_AS(rational_from_string("1/0"), Error);
  CHECK_THROWS_AS(rational_from_string("abc"), Error);
}
