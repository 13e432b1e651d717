#pragma once

// Exhaustive sandwich sweeps: every applicable bound evaluated against the
// enumerated exact probability over full constraint-shape ranges. Degree
// sequences run over sorted canonical representatives; every checked quantity
// is invariant under vertex relabelling (covered by the unit suite).

#include <cstdint>
#include <string>

namespace degbound::acceptance {

struct SandwichSweepConfig {
  int max_n = 7;
  int max_degree_sum = 12;
  int max_target_edges = 3;
  int max_forbidden_edges = 2;
  int bipartite_max_side = 4;
  int bipartite_max_sum = 6;
  int threads = 2;
  long long node_budget = 100'000'000;
};

struct SweepStats {
  long long feasible_bases = 0;   // (d, L) pairs with a non-empty base class
  long long targets_checked = 0;  // (d, L, X) triples
  long long bound_checks = 0;     // individual inequality comparisons
  long long violations = 0;
  std::string first_violation;
};

SweepStats generic_sandwich_sweep(const SandwichSweepConfig& config);
SweepStats bipartite_sandwich_sweep(const SandwichSweepConfig& config);

}  // namespace degbound::acceptance
