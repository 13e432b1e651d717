#include <algorithm>
#include <numeric>
#include <random>

#include "degbound/generic_bounds.hpp"
#include "degbound/oracle.hpp"
#include "doctest.h"
#include "test_oracles.hpp"

using namespace degbound;

namespace {

Rational rat(long long num, long long den = 1) { return make_rational(num, den); }

DegreeSequence one_regular(int n) { return DegreeSequence(std::vector<int>(n, 1)); }

}  // namespace

TEST_CASE("f and g error terms on matching classes") {
  LabelledGraph none6 = LabelledGraph::empty(6), none20 = LabelledGraph::empty(20);
  CHECK(f_term(one_regular(6), none6, none6, {0, 1}) == rat(2, 3));
  CHECK(f_term(one_regular(20), none20, none20, {0, 1}) == rat(9, 10));
  CHECK(g_term(one_regular(6), none6, none6, {0, 1}) == rat(0));
  CHECK(g_term(one_regular(20), none20, none20, {0, 1}) == rat(7, 10));

  DegreeSequence two_reg({2, 2, 2, 2});
  LabelledGraph none4 = LabelledGraph::empty(4);
  CHECK(f_term(two_reg, none4, none4, {0, 1}) == rat(0));

  DegreeSequence zero4({0, 0, 0, 0});
  CHECK_THROWS_AS(f_term(zero4, none4, none4, {0, 1}), Error);  // m(G) = m(H)
}

TEST_CASE("single edge bounds on matchings are tight where expected") {
  SUBCASE("six vertices") {
    auto b = single_edge_bounds(one_regular(6), LabelledGraph::empty(6), LabelledGraph::empty(6), {0, 1});
    REQUIRE(b.upper_applicable());
    CHECK(*b.upper_clamped == rat(1, 5));
    CHECK_FALSE(b.lower_applicable());
    CHECK(b.first_failing_g == 0);
    // exact probability over the 15 perfect matchings
    Rational exact = exact_probability(
        ProblemInstance{one_regular(6), LabelledGraph::empty(6), LabelledGraph::empty(6)},
        LabelledGraph::from_edges(6, {{0, 1}}), EventKind::contains);
    CHECK(exact == rat(1, 5));
  }
  SUBCASE("twenty vertices") {
    auto b = single_edge_bounds(one_regular(20), LabelledGraph::empty(20), LabelledGraph::empty(20), {0, 1});
    REQUIRE(b.upper_applicable());
    REQUIRE(b.lower_applicable());
    CHECK(*b.upper_clamped == rat(1, 19));
    CHECK(*b.lower == rat(7, 207));
    // closed form: a fixed edge lies in 1/(2k-1) of the matchings of K_{2k}
    CHECK(rat(testing::double_factorial_odd(9), testing::double_factorial_odd(10)) == rat(1, 19));
  }
  SUBCASE("zero residual degree reports an exact zero") {
    DegreeSequence d({1, 1, 1, 1});
    LabelledGraph h = LabelledGraph::from_edges(4, {{0, 1}});
    auto b = single_edge_bounds(d, h, LabelledGraph::empty(4), {0, 2});
    CHECK(b.exact_zero);
    CHECK(*b.upper_clamped == rat(0));
  }
}

TEST_CASE("subgraph bounds") {
  SUBCASE("two disjoint edges among six matched vertices") {
    LabelledGraph x = LabelledGraph::from_edges(6, {{0, 1}, {2, 3}});
    auto b = subgraph_bounds(one_regular(6), x, LabelledGraph::empty(6));
    CHECK(pi_factor(one_regular(6), x) == rat(1, 24));
    REQUIRE(b.upper_applicable());
    CHECK(*b.upper_raw == rat(1, 8));
    CHECK_FALSE(b.lower_applicable());
    Rational exact = exact_probability(
        ProblemInstance{one_regular(6), LabelledGraph::empty(6), LabelledGraph::empty(6)}, x,
        EventKind::contains);
    CHECK(exact == rat(1, 15));
    CHECK(exact <= *b.upper_clamped);
  }
  SUBCASE("two disjoint edges among twenty matched vertices, lower applicable") {
    LabelledGraph x = LabelledGraph::from_edges(20, {{0, 1}, {2, 3}});
    auto b = subgraph_bounds(one_regular(20), x, LabelledGraph::empty(20));
    REQUIRE(b.upper_applicable());
    REQUIRE(b.lower_applicable());
    // exact value 1/(19*17) from the double-factorial count
    Rational exact = rat(testing::double_factorial_odd(8), testing::double_factorial_odd(10));
    CHECK(exact == rat(1, 323));
    CHECK(*b.lower <= exact);
    CHECK(exact <= *b.upper_clamped);
  }
  SUBCASE("empty target gives the trivial bounds") {
    auto b = subgraph_bounds(one_regular(6), LabelledGraph::empty(6), LabelledGraph::empty(6));
    CHECK(*b.lower == rat(1));
    CHECK(*b.upper_clamped == rat(1));
  }
  SUBCASE("target exceeding a degree is an exact zero") {
    LabelledGraph x = LabelledGraph::from_edges(6, {{0, 1}, {0, 2}});
    auto b = subgraph_bounds(one_regular(6), x, LabelledGraph::empty(6));
    CHECK(b.exact_zero);
    CHECK(*b.upper_clamped == rat(0));
  }
  SUBCASE("one-edge target: product bound is valid but weaker than the direct lemma") {
    LabelledGraph x = LabelledGraph::from_edges(6, {{0, 1}});
    auto chain = subgraph_bounds(one_regular(6), x, LabelledGraph::empty(6));
    auto single = single_edge_bounds(one_regular(6), LabelledGraph::empty(6), LabelledGraph::empty(6),
                                     {0, 1});
    REQUIRE(chain.upper_applicable());
    CHECK(*chain.upper_raw == rat(1, 4));  // Pi / f = (1/6) / (2/3)
    CHECK(*single.upper_clamped == rat(1, 5));
    CHECK(*single.upper_clamped <= *chain.upper_raw);
    CHECK(rat(1, 5) <= *chain.upper_clamped);  // exact stays below both
  }
}

TEST_CASE("forbidden-edge bounds") {
  SUBCASE("single forbidden edge among twenty matched vertices") {
    LabelledGraph y = LabelledGraph::from_edges(20, {{0, 1}});
    auto b = forbidden_bounds(one_regular(20), LabelledGraph::empty(20), y);
    CHECK(phi_factor(one_regular(20), y) == rat(20, 21));
    REQUIRE(b.lower_applicable());
    REQUIRE(b.upper_applicable());
    CHECK(*b.lower == rat(6, 7));
    CHECK(*b.upper_raw == rat(200, 147));
    CHECK(*b.upper_clamped == rat(1));
    Rational exact = rat(18, 19);  // 1 - 1/19
    CHECK(*b.lower <= exact);
    CHECK(exact <= *b.upper_clamped);
  }
  SUBCASE("empty forbidden target") {
    auto b = forbidden_bounds(one_regular(6), LabelledGraph::empty(6), LabelledGraph::empty(6));
    CHECK(*b.lower == rat(1));
    CHECK(*b.upper_clamped == rat(1));
  }
}

TEST_CASE("bounds are valid for every edge order") {
  // d = (2,2,2,1,1) with a 3-edge target; all 6 permutations must bracket the
  // enumerated probability whenever applicable.
  DegreeSequence d({2, 2, 2, 1, 1});
  LabelledGraph x = LabelledGraph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}});
  LabelledGraph l = LabelledGraph::empty(5);
  ProblemInstance base{d, LabelledGraph::empty(5), l};
  Rational exact = exact_probability(base, x, EventKind::contains);

  std::vector<int> perm{0, 1, 2};
  do {
    auto b = subgraph_bounds(d, x, l, EdgeOrder::explicit_order(perm));
    if (b.upper_applicable()) CHECK(exact <= *b.upper_clamped);
    if (b.lower_applicable()) CHECK(*b.lower <= exact);
    // the avoidance bounds must bracket their event under the same orders
    auto fb = forbidden_bounds(d, l, x, EdgeOrder::explicit_order(perm));
    ProblemInstance base{d, LabelledGraph::empty(5), l};
    Rational exact_avoid = exact_probability(base, x, EventKind::avoids);
    if (fb.upper_applicable()) CHECK(exact_avoid <= *fb.upper_clamped);
    if (fb.lower_applicable()) CHECK(*fb.lower <= exact_avoid);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("best-of order search never loosens the given order") {
  DegreeSequence d({3, 2, 2, 2, 1, 1, 1});
  LabelledGraph x = LabelledGraph::from_edges(7, {{0, 1}, {0, 2}, {1, 2}});
  LabelledGraph l = LabelledGraph::from_edges(7, {{3, 4}});
  auto given = subgraph_bounds(d, x, l);
  auto best = subgraph_bounds(d, x, l, EdgeOrder::best_of(24, 7));
  if (given.upper_applicable() && best.upper_applicable())
    CHECK(*best.upper_raw <= *given.upper_raw);
  if (given.lower_applicable() && best.lower_applicable()) CHECK(*best.lower >= *given.lower);
  // and any best-of bound still brackets the exact value
  ProblemInstance base{d, LabelledGraph::empty(7), l};
  Rational exact = exact_probability(base, x, EventKind::contains);
  if (best.upper_applicable()) CHECK(exact <= *best.upper_clamped);
  if (best.lower_applicable()) CHECK(*best.lower <= exact);
}

TEST_CASE("leading factor recomputed from first principles") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 50; ++it) {
    const int n = 6;
    std::vector<int> degs(n);
    for (int& v : degs) v = std::uniform_int_distribution<int>(0, 4)(rng);
    if (std::accumulate(degs.begin(), degs.end(), 0) % 2) degs[0] ^= 1;
    DegreeSequence d(degs);
    std::vector<Edge> pool;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pool.push_back({u, v});
    std::shuffle(pool.begin(), pool.end(), rng);
    LabelledGraph x = LabelledGraph::from_edges(n, {pool[0], pool[1]});
    DegreeSequence xdeg = degree_sequence_of(x);

    BigInt num = 1;
    for (int j = 0; j < n; ++j) num *= falling_factorial(d[j], xdeg[j]);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, 2);
    den *= falling_factorial(d.sum() / 2, 2);
    if (den == 0) continue;
    CHECK(pi_factor(d, x) == make_rational(num, den));
  }
}

TEST_CASE("corollary diagnostics") {
  SUBCASE("weighted averages stay below their restricted maxima") {
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (int it = 0; it < 900; ++it) {
      const int n = std::uniform_int_distribution<int>(3, 8)(rng);
      std::vector<int> degs(n);
      for (int& v : degs) v = std::uniform_int_distribution<int>(0, n - 1)(rng);
      if (std::accumulate(degs.begin(), degs.end(), 0) % 2) continue;
      DegreeSequence d(degs);
      std::vector<Edge> pool;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pool.push_back({u, v});
      std::shuffle(pool.begin(), pool.end(), rng);
      const int mx = std::uniform_int_distribution<int>(1, 3)(rng);
      std::vector<Edge> xe(pool.begin(), pool.begin() + mx);
      LabelledGraph x = LabelledGraph::from_edges(n, xe);
      LabelledGraph l = pool.size() > static_cast<std::size_t>(mx)
                            ? LabelledGraph::from_edges(n, {pool[mx]})
                            : LabelledGraph::empty(n);
      DegreeSequence xdeg = degree_sequence_of(x);
      bool fits = true;
      for (int i = 0; i < n; ++i) fits = fits && xdeg[i] <= degs[i];
      if (!fits) continue;

      auto contain = corollary_diagnostics(d, x, l, DiagnosticReport::Mode::contain);
      DegreeSequence dl = add(d, degree_sequence_of(l));
      REQUIRE(contain.kappa.has_value());
      CHECK(*contain.kappa <= make_rational(restricted_max_degree(dl, x), 1));
      REQUIRE(contain.mu.has_value());
      CHECK(*contain.mu <= gamma_value(d, degree_sequence_of(l), d, xdeg));

      auto forbid = corollary_diagnostics(d, x, l, DiagnosticReport::Mode::forbid);
      DegreeSequence dly = add(dl, xdeg);
      REQUIRE(forbid.eta.has_value());
      CHECK(*forbid.eta <= make_rational(restricted_max_degree(dly, x), 1));
      REQUIRE(forbid.lambda.has_value());
      CHECK(*forbid.lambda <= gamma_value(d, add(degree_sequence_of(l), xdeg), d, zeros(n)));
      ++checked;
    }
    CHECK(checked > 100);
  }
  SUBCASE("empty target") {
    DegreeSequence d({1, 1});
    auto rep = corollary_diagnostics(d, LabelledGraph::empty(2), LabelledGraph::empty(2),
                                     DiagnosticReport::Mode::contain);
    CHECK(rep.pi_or_phi == rat(1));
    CHECK_FALSE(rep.kappa.has_value());
    CHECK_FALSE(rep.mu.has_value());
    CHECK_FALSE(rep.rho.has_value());
    REQUIRE(rep.big_lambda.has_value());
    CHECK(*rep.big_lambda == rat(0));
  }
}

TEST_CASE("forbidding an edge elsewhere can raise a containment probability") {
  // Conditioning is not monotone: on four matched vertices, forbidding one
  // edge at a shared endpoint lifts P({0,1} present) from 1/3 to 1/2.
  DegreeSequence d({1, 1, 1, 1});
  LabelledGraph x = LabelledGraph::from_edges(4, {{0, 1}});
  ProblemInstance free{d, LabelledGraph::empty(4), LabelledGraph::empty(4)};
  ProblemInstance pinned{d, LabelledGraph::empty(4), LabelledGraph::from_edges(4, {{0, 2}})};
  CHECK(exact_probability(free, x, EventKind::contains) == rat(1, 3));
  CHECK(exact_probability(pinned, x, EventKind::contains) == rat(1, 2));
}
