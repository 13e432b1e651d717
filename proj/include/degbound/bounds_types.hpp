#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "degbound/graphs.hpp"
#include "degbound/rational.hpp"

namespace degbound {

// How to enumerate the edges of X (or Y) when evaluating a bound chain. Every
// enumeration yields a certified bound; the numeric value depends on the
// order, so best_of keeps the tightest lower and upper across random orders.
struct EdgeOrder {
  enum class Policy { given, random, best_of, explicit_order };
  Policy policy = Policy::given;
  int candidates = 1;  // number of random orders tried under best_of
  std::uint64_t seed = 0;
  std::vector<int> permutation;  // explicit_order only

  static EdgeOrder given() { return {}; }
  static EdgeOrder random(std::uint64_t seed) { return {Policy::random, 1, seed, {}}; }
  static EdgeOrder best_of(int n, std::uint64_t seed) { return {Policy::best_of, n, seed, {}}; }
  static EdgeOrder explicit_order(std::vector<int> perm) {
    return {Policy::explicit_order, 1, 0, std::move(perm)};
  }
};

// The list of permutations a policy expands to for a k-edge target.
// Validates explicit permutations; used by both bound families.
std::vector<std::vector<int>> expand_edge_orders(int k, const EdgeOrder& order);

// Per-edge error terms along a bound chain. For generic graphs these are the
// f/g values, for bipartite graphs the p/q values.
struct EdgeTermInfo {
  Edge edge;
  Rational f;  // activates the upper bound when positive
  Rational g;  // activates the lower bound when positive
  bool f_positive = false;
  bool g_positive = false;
};

// Exact-rational probability bounds with per-edge applicability. A bound is
// absent when the activating terms are not all positive. The raw upper bound
// is the theorem product and may exceed 1; the clamped value is min(raw, 1).
struct ProbabilityBound {
  std::optional<Rational> lower;
  std::optional<Rational> upper_raw;
  std::optional<Rational> upper_clamped;
  // Degenerate instance whose probability is identically zero (a residual
  // degree hit zero, or the target needs more edges at a vertex than its
  // degree). Both bounds are reported as 0.
  bool exact_zero = false;
  std::string theorem;  // provenance of the formula used
  std::vector<EdgeTermInfo> terms;
  int first_failing_f = -1;  // index into terms of the first f <= 0, -1 if none
  int first_failing_g = -1;
  std::vector<int> order_for_upper;  // permutation of input edges behind each bound
  std::vector<int> order_for_lower;

  bool upper_applicable() const { return upper_clamped.has_value(); }
  bool lower_applicable() const { return lower.has_value(); }
};

// Finite-n values of the quantities appearing in the simplified corollaries.
// rho is the achieved hypothesis ratio of the simplified upper-bound route;
// the bound products themselves remain the certified path. c_of_k is the
// transcendental ln(1-rho)/rho and is reported as a double only.
struct DiagnosticReport {
  enum class Mode { contain, forbid };
  Mode mode = Mode::contain;
  bool bipartite = false;
  std::optional<Rational> rho;
  bool rho_below_one = false;
  std::optional<double> c_of_k;
  Rational pi_or_phi;  // leading closed-form factor Pi(X) or Phi(Y)

  // contain mode (undefined when m(X) = 0)
  std::optional<Rational> kappa, mu, big_lambda;
  // forbid mode (undefined when m(Y) = 0)
  std::optional<Rational> lambda, eta;
  // bipartite splits of the same quantities
  std::optional<Rational> kappa_s, kappa_t, mu_s, mu_t;
  std::optional<Rational> lambda_s, lambda_t, eta_s, eta_t;
};

}  // namespace degbound
