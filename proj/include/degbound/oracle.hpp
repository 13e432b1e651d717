#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "degbound/graphs.hpp"
#include "degbound/rational.hpp"

namespace degbound {

struct EnumLimits {
  long long node_budget = 100'000'000;  // search nodes before Error{resource_limit}
};

struct ClassCount {
  BigInt count;
  bool feasible = false;  // count > 0
};

// Lightweight adjacency-bitset window onto the graph currently held by an
// enumerator. Valid only inside the enumeration callback.
struct GraphView {
  int n = 0;
  const std::uint64_t* adj = nullptr;
  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1ULL; }
  std::vector<Edge> edge_list() const;
  LabelledGraph to_graph() const;
};

struct BipartiteView {
  int m = 0, n = 0;
  const std::uint64_t* adj = nullptr;  // adj[u] = right-neighbour mask of left vertex u
  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1ULL; }
  std::vector<Edge> edge_list() const;
  BipartiteGraph to_graph() const;
};

namespace detail {

bool erdos_gallai_graphical(std::vector<int> degrees);
bool gale_ryser_feasible(std::vector<int> left, std::vector<int> right);

// Backtracking enumeration of all simple graphs with the target degree
// sequence containing every required edge and no forbidden edge. Vertices are
// completed in decreasing residual-degree order (ties by label) and neighbour
// sets are chosen in ascending label order, so the graph stream is
// deterministic. Residual sequences are pruned with the graphicality test.
class GenericEnumerator {
 public:
  GenericEnumerator(const ProblemInstance& inst, const EnumLimits& limits);

  bool degenerate_empty() const { return degenerate_empty_; }

  template <class F>
  long long run(F&& cb) {
    if (degenerate_empty_) return 0;
    count_ = 0;
    nodes_ = 0;
    descend(std::forward<F>(cb));
    return count_;
  }

 private:
  template <class F>
  void descend(F&& cb) {
    bump();
    int v = -1;
    for (int i = 0; i < n_; ++i)
      if (residual_[i] > 0 && (v < 0 || residual_[i] > residual_[v])) v = i;
    if (v < 0) {
      ++count_;
      cb(GraphView{n_, adj_.data()});
      return;
    }
    std::uint64_t allowed = ~(adj_[v] | blocked_[v]) & full_mask_;
    candidates_scratch_.clear();
    for (int w = 0; w < n_; ++w)
      if (((allowed >> w) & 1ULL) && residual_[w] > 0) candidates_scratch_.push_back(w);
    if (static_cast<int>(candidates_scratch_.size()) < residual_[v]) return;
    std::vector<int> cand = candidates_scratch_;  // descend() reuses the scratch below us
    choose(cb, v, cand, 0, residual_[v]);
  }

  template <class F>
  void choose(F&& cb, int v, const std::vector<int>& cand, int start, int need) {
    bump();
    if (need == 0) {
      const int saved = residual_[v];
      residual_[v] = 0;
      if (residual_graphical()) descend(cb);
      residual_[v] = saved;
      return;
    }
    if (static_cast<int>(cand.size()) - start < need) return;
    const int w = cand[start];
    // take w; residual_[v] is zeroed in one go on completion
    adj_[v] |= 1ULL << w;
    adj_[w] |= 1ULL << v;
    --residual_[w];
    choose(cb, v, cand, start + 1, need - 1);
    adj_[v] &= ~(1ULL << w);
    adj_[w] &= ~(1ULL << v);
    ++residual_[w];
    // skip w
    choose(cb, v, cand, start + 1, need);
  }

  void bump();
  bool residual_graphical() const;

  int n_ = 0;
  std::uint64_t full_mask_ = 0;
  std::vector<int> residual_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint64_t> blocked_;
  std::vector<int> candidates_scratch_;
  long long count_ = 0, nodes_ = 0, budget_ = 0;
  bool degenerate_empty_ = false;
};

class BipartiteEnumerator {
 public:
  BipartiteEnumerator(const BipartiteInstance& inst, const EnumLimits& limits);

  bool degenerate_empty() const { return degenerate_empty_; }

  template <class F>
  long long run(F&& cb) {
    if (degenerate_empty_) return 0;
    count_ = 0;
    nodes_ = 0;
    descend(std::forward<F>(cb));
    return count_;
  }

 private:
  template <class F>
  void descend(F&& cb) {
    bump();
    int u = -1;
    for (int i = 0; i < m_; ++i)
      if (left_residual_[i] > 0 && (u < 0 || left_residual_[i] > left_residual_[u])) u = i;
    if (u < 0) {
      bool right_done = true;
      for (int j = 0; j < n_; ++j) right_done = right_done && right_residual_[j] == 0;
      if (right_done) {
        ++count_;
        cb(BipartiteView{m_, n_, adj_.data()});
      }
      return;
    }
    std::uint64_t allowed = ~(adj_[u] | blocked_[u]) & full_mask_;
    candidates_scratch_.clear();
    for (int w = 0; w < n_; ++w)
      if (((allowed >> w) & 1ULL) && right_residual_[w] > 0) candidates_scratch_.push_back(w);
    if (static_cast<int>(candidates_scratch_.size()) < left_residual_[u]) return;
    std::vector<int> cand = candidates_scratch_;
    choose(cb, u, cand, 0, left_residual_[u]);
  }

  template <class F>
  void choose(F&& cb, int u, const std::vector<int>& cand, int start, int need) {
    bump();
    if (need == 0) {
      const int saved = left_residual_[u];
      left_residual_[u] = 0;
      if (residual_feasible()) descend(cb);
      left_residual_[u] = saved;
      return;
    }
    if (static_cast<int>(cand.size()) - start < need) return;
    const int w = cand[start];
    adj_[u] |= 1ULL << w;
    --right_residual_[w];
    choose(cb, u, cand, start + 1, need - 1);
    adj_[u] &= ~(1ULL << w);
    ++right_residual_[w];
    choose(cb, u, cand, start + 1, need);
  }

  void bump();
  bool residual_feasible() const;

  int m_ = 0, n_ = 0;
  std::uint64_t full_mask_ = 0;
  std::vector<int> left_residual_, right_residual_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint64_t> blocked_;
  std::vector<int> candidates_scratch_;
  long long count_ = 0, nodes_ = 0, budget_ = 0;
  bool degenerate_empty_ = false;
};

}  // namespace detail

// Exact number of graphs in the class; optionally streams every graph in the
// deterministic enumeration order.
ClassCount enumerate_class(const ProblemInstance& inst, const EnumLimits& limits = {});
ClassCount enumerate_class(const ProblemInstance& inst, const EnumLimits& limits,
                           const std::function<void(const GraphView&)>& cb);
ClassCount enumerate_class(const BipartiteInstance& inst, const EnumLimits& limits = {});
ClassCount enumerate_class(const BipartiteInstance& inst, const EnumLimits& limits,
                           const std::function<void(const BipartiteView&)>& cb);

enum class EventKind { contains, avoids };

// P(event | G uniform on the class described by base). The base class must be
// non-empty; throws Error{infeasible_base} otherwise.
Rational exact_probability(const ProblemInstance& base, const LabelledGraph& event_graph,
                           EventKind kind, const EnumLimits& limits = {});
Rational exact_probability(const BipartiteInstance& base, const BipartiteGraph& event_graph,
                           EventKind kind, const EnumLimits& limits = {});

// |class with H+uv required, L forbidden| / |class with H required, L+uv forbidden|,
// the exact ratio the switching arguments bound.
Rational exact_ratio(const DegreeSequence& d, const LabelledGraph& h, const LabelledGraph& l,
                     Edge uv, const EnumLimits& limits = {});
Rational exact_ratio_bipartite(const DegreeSequence& s, const DegreeSequence& t,
                               const BipartiteGraph& h, const BipartiteGraph& l, Edge uv,
                               const EnumLimits& limits = {});

// Exact per-graph counts of switching tuples, straight from the tuple
// definitions. The forward direction counts over the class with uv required
// and M forbidden, the backward direction over the class with M+uv forbidden.
namespace switching {
long long forward_two(const GraphView& g, Edge uv, const std::uint64_t* m_adj);
long long backward_two(const GraphView& g, Edge uv, const std::uint64_t* m_adj);
long long forward_three(const GraphView& g, Edge uv, const std::uint64_t* m_adj);
long long backward_three(const GraphView& g, Edge uv, const std::uint64_t* m_adj);
long long forward_two(const BipartiteView& g, Edge uv, const std::uint64_t* m_adj);
long long backward_two(const BipartiteView& g, Edge uv, const std::uint64_t* m_adj);
long long forward_three(const BipartiteView& g, Edge uv, const std::uint64_t* m_adj);
long long backward_three(const BipartiteView& g, Edge uv, const std::uint64_t* m_adj);
std::vector<std::uint64_t> adjacency_masks(const LabelledGraph& g);
std::vector<std::uint64_t> adjacency_masks(const BipartiteGraph& g);
}  // namespace switching

enum class SwitchDirection { forward, backward };

struct SwitchingCensus {
  int arity = 2;
  SwitchDirection direction = SwitchDirection::forward;
  std::vector<long long> per_graph;  // indexed by enumeration order
  long long class_total = 0;
};

SwitchingCensus switching_census(const DegreeSequence& d, Edge uv, const LabelledGraph& m_graph,
                                 int arity, SwitchDirection direction, const EnumLimits& limits = {});
SwitchingCensus switching_census_bipartite(const DegreeSequence& s, const DegreeSequence& t, Edge uv,
                                           const BipartiteGraph& m_graph, int arity,
                                           SwitchDirection direction, const EnumLimits& limits = {});

// Exhaustive verification of the per-graph switching-count inequalities, the
// forward/backward double-counting identities, and the exact class-ratio
// brackets, over every canonical degree sequence in the configured range.
struct ClaimSweepConfig {
  int max_n = 7;
  int max_degree_sum = 12;
  int three_switch_max_n = 6;
  int bipartite_max_side = 4;
  int bipartite_max_sum = 6;
  int random_forbidden_edges = 2;  // size of the seeded random forbidden set
  std::uint64_t seed = 20240901;
  long long node_budget = 100'000'000;
  bool generic = true;
  bool bipartite = true;
};

struct ClaimSweepReport {
  long long classes_checked = 0;
  long long graphs_checked = 0;
  long long claims_checked = 0;
  long long violations = 0;
  std::string first_violation;
};

ClaimSweepReport verify_claims(const ClaimSweepConfig& config);

// All non-increasing degree vectors of length n with entries <= n-1 and even
// sum <= max_sum. Sweeps run over these canonical representatives; every
// quantity checked is invariant under vertex relabelling.
std::vector<std::vector<int>> canonical_degree_sequences(int n, int max_sum);
// All pairs (sorted s, sorted t) with |s| = m, |t| = n, equal sums <= max_sum.
std::vector<std::pair<std::vector<int>, std::vector<int>>> canonical_bipartite_sequences(
    int m, int n, int max_sum);

// Diagnostic-only Monte Carlo estimate along a 2-switch chain restricted to
// the instance's class (required edges frozen, forbidden edges rejected).
// Not certified: irreducibility of the constrained chain is not established.
struct McmcResult {
  double estimate = 0;
  double std_error = 0;  // batch-means standard error
  long long steps = 0, burn_in = 0;
  std::uint64_t seed = 0;
  double acceptance_rate = 0;
};

McmcResult mcmc_estimate(const ProblemInstance& inst, const LabelledGraph& event_graph,
                         EventKind kind, long long steps, long long burn_in, std::uint64_t seed);
McmcResult mcmc_estimate_bipartite(const BipartiteInstance& inst, const BipartiteGraph& event_graph,
                                   EventKind kind, long long steps, long long burn_in,
                                   std::uint64_t seed);

// First graph of the class in enumeration order after a greedy construction
// attempt; used to seed the sampler. Throws Error{realization_failure} when
// the class is empty or out of reach.
LabelledGraph realize_graph(const ProblemInstance& inst, const EnumLimits& limits = {});
BipartiteGraph realize_graph(const BipartiteInstance& inst, const EnumLimits& limits = {});

}  // namespace degbound
