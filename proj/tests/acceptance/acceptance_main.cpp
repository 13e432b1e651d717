// Acceptance gate: one pass/fail line per criterion, exit 0 only if all pass.
//
//   1  generic sandwich sweep (n <= 7, degree sum <= 12, |X| <= 3, |L| <= 2)
//   2  bipartite sandwich sweep (sides <= 4, degree sum <= 6, same shapes)
//   3  switching-claim sweep (pointwise counts + double-counting identities)
//   4  tightness pins on matching classes (exact rational equality)
//   5  degree-sum property suite, 1000 seeded instances
//   6  example family ex1: bound ratio trend over n = 1e3..1e6
//   7  example family ex4: leading factor vs closed form, g-product cap
//   8  Monte Carlo cross-check against the certified interval
//
// Run a subset with --only N (repeatable).

#include <chrono>
#include <cmath>
#include <cstring>
#include <iostream>
#include <set>
#include <thread>
#include <sstream>
#include <vector>

#include "degbound/bipartite_bounds.hpp"
#include "degbound/example_families.hpp"
#include "degbound/generic_bounds.hpp"
#include "degbound/oracle.hpp"
#include "sweeps.hpp"
#include "test_oracles.hpp"

using namespace degbound;
using namespace degbound::acceptance;

namespace {

struct CriterionResult {
  bool pass = false;
  std::string detail;
};

Rational rat(long long num, long long den = 1) { return make_rational(num, den); }

DegreeSequence one_regular(int n) { return DegreeSequence(std::vector<int>(n, 1)); }

CriterionResult criterion_1() {
  SandwichSweepConfig config;
  config.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  SweepStats stats = generic_sandwich_sweep(config);
  std::ostringstream os;
  os << stats.feasible_bases << " feasible (d,L) bases, " << stats.targets_checked << " targets, "
     << stats.bound_checks << " bound checks, " << stats.violations << " violations";
  if (stats.violations > 0) os << "; first: " << stats.first_violation;
  return {stats.violations == 0 && stats.bound_checks > 0, os.str()};
}

CriterionResult criterion_2() {
  SandwichSweepConfig config;
  config.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  SweepStats stats = bipartite_sandwich_sweep(config);
  std::ostringstream os;
  os << stats.feasible_bases << " feasible (s,t,L) bases, " << stats.targets_checked << " targets, "
     << stats.bound_checks << " bound checks, " << stats.violations << " violations";
  if (stats.violations > 0) os << "; first: " << stats.first_violation;
  return {stats.violations == 0 && stats.bound_checks > 0, os.str()};
}

CriterionResult criterion_3() {
  ClaimSweepConfig config;  // defaults: n <= 7, sum <= 12, 3-switches n <= 6, sides <= 4
  ClaimSweepReport rep = verify_claims(config);
  std::ostringstream os;
  os << rep.classes_checked << " classes, " << rep.graphs_checked << " graphs, "
     << rep.claims_checked << " claims, " << rep.violations << " violations";
  if (rep.violations > 0) os << "; first: " << rep.first_violation;
  return {rep.violations == 0 && rep.claims_checked > 0, os.str()};
}

CriterionResult criterion_4() {
  bool pass = true;
  std::ostringstream os;

  auto check = [&](bool ok, const std::string& what) {
    pass = pass && ok;
    if (!ok) os << "[failed: " << what << "] ";
  };

  // n = 6: upper equals the enumerated probability exactly
  {
    auto b = single_edge_bounds(one_regular(6), LabelledGraph::empty(6), LabelledGraph::empty(6),
                                {0, 1});
    Rational exact = exact_probability(
        ProblemInstance{one_regular(6), LabelledGraph::empty(6), LabelledGraph::empty(6)},
        LabelledGraph::from_edges(6, {{0, 1}}), EventKind::contains);
    check(b.upper_clamped && *b.upper_clamped == rat(1, 5), "n=6 upper = 1/5");
    check(exact == rat(1, 5), "n=6 exact = 1/5");
  }
  // n = 8
  {
    auto b = single_edge_bounds(one_regular(8), LabelledGraph::empty(8), LabelledGraph::empty(8),
                                {0, 1});
    Rational exact = exact_probability(
        ProblemInstance{one_regular(8), LabelledGraph::empty(8), LabelledGraph::empty(8)},
        LabelledGraph::from_edges(8, {{0, 1}}), EventKind::contains);
    check(b.upper_clamped && *b.upper_clamped == rat(1, 7), "n=8 upper = 1/7");
    check(exact == rat(1, 7), "n=8 exact = 1/7");
  }
  // n = 20: exact value from the matching count formula
  {
    auto b = single_edge_bounds(one_regular(20), LabelledGraph::empty(20), LabelledGraph::empty(20),
                                {0, 1});
    Rational exact = rat(testing::double_factorial_odd(9), testing::double_factorial_odd(10));
    check(b.upper_clamped && *b.upper_clamped == rat(1, 19), "n=20 upper = 1/19");
    check(exact == rat(1, 19), "n=20 exact = 1/19");
    check(b.lower && *b.lower == rat(7, 207), "n=20 lower = 7/207");
  }
  if (pass) os << "matching pins 1/5, 1/7, 1/19, 7/207 all exact";
  return {pass, os.str()};
}

CriterionResult criterion_5() {
  auto res = testing::run_degree_sum_property_suite(20240901, 1000);
  std::ostringstream os;
  os << res.checks << " checks, " << res.violations << " violations";
  if (res.violations > 0) os << "; first: " << res.first_violation;
  return {res.violations == 0 && res.checks > 10000, os.str()};
}

CriterionResult criterion_6() {
  bool pass = true;
  std::ostringstream os;
  Rational previous_ratio;
  bool have_previous = false;
  for (long long n : {1000LL, 10'000LL, 100'000LL, 1'000'000LL}) {
    ExampleFamily fam = build_example("ex1", n);
    auto b = subgraph_bounds(fam.degrees, fam.target, fam.conditioning);
    if (!b.upper_clamped || !b.lower || *b.lower <= 0) {
      os << "[n=" << n << ": bounds inapplicable] ";
      pass = false;
      continue;
    }
    Rational ratio = *b.upper_clamped / *b.lower;
    os << "n=1e" << static_cast<int>(std::log10(static_cast<double>(n)))
       << " ratio=" << rational_to_decimal(ratio, 6) << " ";
    if (have_previous && ratio > previous_ratio) {
      os << "[ratio increased] ";
      pass = false;
    }
    previous_ratio = ratio;
    have_previous = true;
    if (n == 1'000'000) {
      if (!(ratio <= rat(3, 2))) {
        os << "[final ratio above 1.5] ";
        pass = false;
      }
      Rational pi = pi_factor(fam.degrees, fam.target);
      if (!(*b.lower >= rat(7, 10) * pi && *b.upper_clamped <= rat(11, 10) * pi)) {
        os << "[bounds left the 0.7..1.1 Pi window] ";
        pass = false;
      }
    }
  }
  return {pass, os.str()};
}

CriterionResult criterion_7() {
  bool pass = true;
  std::ostringstream os;
  ExampleFamily fam = build_example("ex4", 1'000'000);
  auto b = forbidden_bounds(fam.degrees, fam.conditioning, fam.target);
  Rational phi = phi_factor(fam.degrees, fam.target);
  const double target = fam.asymptotic_target;
  const double phi_d = phi.get_d();
  const double rel = std::abs(phi_d - target) / target;
  os << "Phi=" << phi_d << " target=" << target << " rel.err=" << rel << "; ";
  if (!(rel <= 0.05)) {
    os << "[leading factor off by more than 5%] ";
    pass = false;
  }
  if (!b.upper_raw) {
    os << "[upper bound inapplicable] ";
    pass = false;
  } else {
    Rational multiplier = *b.upper_raw / phi;
    os << "g-product multiplier=" << rational_to_decimal(multiplier, 6);
    if (!(multiplier <= rat(21, 20))) {
      os << " [exceeds 1.05: the forbidden triangle touches a log-degree vertex, so each "
            "term's top-degree average is dominated by the linear-degree vertex; the product "
            "multiplier decays only like exp(O(1/ln n)) and sits near 1.169 at n=1e6. The "
            "analogous containment family (ex1) gives 1.0494 here.]";
      pass = false;
    }
  }
  return {pass, os.str()};
}

CriterionResult criterion_8() {
  ProblemInstance inst{one_regular(20), LabelledGraph::empty(20), LabelledGraph::empty(20)};
  LabelledGraph event = LabelledGraph::from_edges(20, {{0, 1}});
  const std::uint64_t seed = 20240901;
  McmcResult res = mcmc_estimate(inst, event, EventKind::contains, 1'000'000, 10'000, seed);
  auto b = single_edge_bounds(one_regular(20), LabelledGraph::empty(20), LabelledGraph::empty(20),
                              {0, 1});
  const double truth = 1.0 / 19.0;
  const double lower = b.lower->get_d();
  const double upper = b.upper_clamped->get_d();
  bool pass = true;
  std::ostringstream os;
  os << "estimate=" << res.estimate << " se=" << res.std_error << ", truth=" << truth
     << ", certified=[" << lower << ", " << upper << "], seed=" << seed;
  if (!(std::abs(res.estimate - truth) <= 3 * res.std_error)) {
    os << " [estimate more than 3 sigma from 1/19]";
    pass = false;
  }
  if (!(res.estimate >= lower && res.estimate <= upper)) {
    os << " [estimate outside the certified interval]";
    pass = false;
  }
  return {pass, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only.insert(std::atoi(argv[++i]));
  }

  struct Entry {
    int index;
    const char* name;
    CriterionResult (*run)();
  };
  const std::vector<Entry> entries = {
      {1, "generic sandwich sweep", criterion_1},
      {2, "bipartite sandwich sweep", criterion_2},
      {3, "switching-claim suite", criterion_3},
      {4, "tightness pins", criterion_4},
      {5, "degree-sum property suite", criterion_5},
      {6, "example ex1 bound-ratio trend", criterion_6},
      {7, "example ex4 leading factor and g-product", criterion_7},
      {8, "Monte Carlo cross-check", criterion_8},
  };

  bool all_pass = true;
  for (const Entry& entry : entries) {
    if (!only.empty() && !only.count(entry.index)) continue;
    const auto started = std::chrono::steady_clock::now();
    CriterionResult result;
    try {
      result = entry.run();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    std::cout << "criterion " << entry.index << " (" << entry.name << "): "
              << (result.pass ? "PASS" : "FAIL") << " [" << result.detail << "] ("
              << elapsed << "s)" << std::endl;
    all_pass = all_pass && result.pass;
  }
  return all_pass ? 0 : 1;
}
