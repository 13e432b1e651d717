#include "degbound/degree_sums.hpp"
#include "doctest.h"
#include "test_oracles.hpp"

using namespace degbound;

namespace {
Rational rat(long long num, long long den = 1) { return make_rational(num, den); }
const DegreeSequence kSample({3, 2, 2, 1});
}  // namespace

TEST_CASE("lazy degree sum") {
  CHECK(lazy_degree_sum(kSample, {}, 2) == 5);
  CHECK(lazy_degree_sum(kSample, {}, 0) == 0);
  // excluding one vertex and summing all the rest counts the full degree sum
  // minus the excluded degree
  ExcludedSet third = ExcludedSet::of({2});
  CHECK(lazy_degree_sum(kSample, third, 3) == kSample.sum() - kSample[2]);
  CHECK_THROWS_AS(lazy_degree_sum(kSample, {}, 5), Error);
  CHECK_THROWS_AS(lazy_degree_sum(kSample, {}, -1), Error);
  CHECK_THROWS_AS(lazy_degree_sum(kSample, third, 4), Error);
}

TEST_CASE("piecewise linear degree sum") {
  CHECK(degree_sum(kSample, rat(2)) == rat(5));
  CHECK(degree_sum(kSample, rat(3, 2)) == rat(4));
  CHECK(degree_sum(kSample, rat(10)) == rat(8));
  CHECK(degree_sum(kSample, rat(1, 2)) == rat(3, 2));
  CHECK_THROWS_AS(degree_sum(kSample, rat(-1, 2)), Error);
}

TEST_CASE("alpha and gamma values") {
  DegreeSequence zero = zeros(4);
  SUBCASE("average of the top residual-degree entries") {
    // vertex 1 has degree 2: average of the top two degrees of (3,2,2,1)
    CHECK(alpha_value(kSample, zero, kSample, zero, 1) == rat(5, 2));
  }
  SUBCASE("zero residual degree falls back to the single largest entry") {
    CHECK(alpha_value(kSample, zero, kSample, kSample, 0) == rat(3));
  }
  SUBCASE("gamma sits at a minimum-residual vertex") {
    CHECK(gamma_value(kSample, zero, kSample, zero) == rat(3));  // top-1 average at degree 1
  }
  SUBCASE("regular residuals make gamma equal every alpha") {
    DegreeSequence reg({2, 2, 2, 2});
    Rational g = gamma_value(kSample, zero, reg, zero);
    for (int w = 0; w < 4; ++w) CHECK(alpha_value(kSample, zero, reg, zero, w) == g);
  }
}

TEST_CASE("exclusion-shift example holds with equality") {
  // excluding the top vertex of (3,2,2,1): 3 + D^A(1) = D(2)
  ExcludedSet top = ExcludedSet::of({0});
  CHECK(rat(kSample[0]) + degree_sum(kSample, top, rat(1)) == degree_sum(kSample, rat(2)));
}

TEST_CASE("degree sum property suite (seeded)") {
  auto res = testing::run_degree_sum_property_suite(12345, 200);
  INFO(res.first_violation);
  CHECK(res.violations == 0);
  CHECK(res.checks > 1000);
}

TEST_CASE("top-sum tracker basics") {
  TopSumTracker tracker({3, 2, 2, 1});
  CHECK(tracker.top_sum(0) == 0);
  CHECK(tracker.top_sum(2) == 5);
  CHECK(tracker.top_sum(99) == 8);
  CHECK(tracker.kth_value(1) == 3);
  CHECK(tracker.kth_value(4) == 1);
  tracker.shift(3, 0);
  CHECK(tracker.top_sum(2) == 4);
  CHECK(tracker.degree_sum_at(rat(3, 2)) == rat(3));
  tracker.add(7);  // beyond the initial value range
  CHECK(tracker.top_sum(1) == 7);
  CHECK(tracker.total() == 12);
}
