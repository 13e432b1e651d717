#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_set>

#include "degbound/oracle.hpp"

namespace degbound {

namespace {

std::uint64_t pack(int a, int b) { return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b); }

struct EdgeSet {
  std::unordered_set<std::uint64_t> members;
  void insert(int u, int v) { members.insert(pack(u, v)); }
  void erase(int u, int v) { members.erase(pack(u, v)); }
  bool has(int u, int v) const { return members.count(pack(u, v)) > 0; }
};

double batch_means_std_error(const std::vector<double>& batch_means) {
  const std::size_t b = batch_means.size();
  if (b < 2) return 0.0;
  double mean = 0;
  for (double x : batch_means) mean += x;
  mean /= static_cast<double>(b);
  double var = 0;
  for (double x : batch_means) var += (x - mean) * (x - mean);
  var /= static_cast<double>(b - 1);
  return std::sqrt(var / static_cast<double>(b));
}

// Greedy realization: repeatedly satisfy the vertex with the largest residual
// degree using the allowed partners of largest residual. Can fail on feasible
// instances with awkward forbidden sets; callers fall back to enumeration.
bool greedy_generic(const ProblemInstance& inst, std::vector<Edge>& out) {
  const int n = inst.degrees.size();
  std::vector<int> residual = inst.degrees.degrees;
  std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
  for (const Edge& e : inst.forbidden.edges) used[e.u][e.v] = used[e.v][e.u] = 1;
  out.clear();
  for (const Edge& e : inst.required.edges) {
    used[e.u][e.v] = used[e.v][e.u] = 1;
    --residual[e.u];
    --residual[e.v];
    out.push_back(e);
  }
  for (int r : residual)
    if (r < 0) return false;
  while (true) {
    int v = -1;
    for (int i = 0; i < n; ++i)
      if (residual[i] > 0 && (v < 0 || residual[i] > residual[v])) v = i;
    if (v < 0) return true;
    std::vector<int> partners;
    for (int w = 0; w < n; ++w)
      if (w != v && residual[w] > 0 && !used[v][w]) partners.push_back(w);
    if (static_cast<int>(partners.size()) < residual[v]) return false;
    std::stable_sort(partners.begin(), partners.end(),
                     [&](int a, int b) { return residual[a] > residual[b]; });
    const int need = residual[v];
    for (int k = 0; k < need; ++k) {
      const int w = partners[k];
      used[v][w] = used[w][v] = 1;
      --residual[w];
      out.push_back({std::min(v, w), std::max(v, w)});
    }
    residual[v] = 0;
  }
}

bool greedy_bipartite(const BipartiteInstance& inst, std::vector<Edge>& out) {
  const int m = inst.left.size(), n = inst.right.size();
  std::vector<int> ls = inst.left.degrees, rs = inst.right.degrees;
  std::vector<std::vector<char>> used(m, std::vector<char>(n, 0));
  for (const Edge& e : inst.forbidden.edges) used[e.u][e.v] = 1;
  out.clear();
  for (const Edge& e : inst.required.edges) {
    used[e.u][e.v] = 1;
    --ls[e.u];
    --rs[e.v];
    out.push_back(e);
  }
  for (int r : ls)
    if (r < 0) return false;
  for (int r : rs)
    if (r < 0) return false;
  while (true) {
    int u = -1;
    for (int i = 0; i < m; ++i)
      if (ls[i] > 0 && (u < 0 || ls[i] > ls[u])) u = i;
    if (u < 0) {
      for (int j = 0; j < n; ++j)
        if (rs[j] != 0) return false;
      return true;
    }
    std::vector<int> partners;
    for (int w = 0; w < n; ++w)
      if (rs[w] > 0 && !used[u][w]) partners.push_back(w);
    if (static_cast<int>(partners.size()) < ls[u]) return false;
    std::stable_sort(partners.begin(), partners.end(), [&](int a, int b) { return rs[a] > rs[b]; });
    const int need = ls[u];
    for (int k = 0; k < need; ++k) {
      const int w = partners[k];
      used[u][w] = 1;
      --rs[w];
      out.push_back({u, w});
    }
    ls[u] = 0;
  }
}

}  // namespace

LabelledGraph realize_graph(const ProblemInstance& inst, const EnumLimits& limits) {
  std::vector<Edge> edges;
  if (greedy_generic(inst, edges)) return LabelledGraph::from_edges(inst.degrees.size(), edges);
  if (inst.degrees.size() <= 64) {
    LabelledGraph first = LabelledGraph::empty(inst.degrees.size());
    bool found = false;
    try {
      detail::GenericEnumerator e(inst, limits);
      e.run([&](const GraphView& g) {
        if (!found) {
          first = g.to_graph();
          found = true;
        }
      });
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::resource_limit) throw;
    }
    if (found) return first;
  }
  fail(ErrorKind::realization_failure, "no starting graph found for the instance");
}

BipartiteGraph realize_graph(const BipartiteInstance& inst, const EnumLimits& limits) {
  std::vector<Edge> edges;
  if (greedy_bipartite(inst, edges))
    return BipartiteGraph::from_edges(inst.left.size(), inst.right.size(), edges);
  if (inst.left.size() <= 64 && inst.right.size() <= 64) {
    BipartiteGraph first = BipartiteGraph::empty(inst.left.size(), inst.right.size());
    bool found = false;
    try {
      detail::BipartiteEnumerator e(inst, limits);
      e.run([&](const BipartiteView& g) {
        if (!found) {
          first = g.to_graph();
          found = true;
        }
      });
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::resource_limit) throw;
    }
    if (found) return first;
  }
  fail(ErrorKind::realization_failure, "no starting bipartite graph found for the instance");
}

McmcResult mcmc_estimate(const ProblemInstance& inst, const LabelledGraph& event_graph,
                         EventKind kind, long long steps, long long burn_in, std::uint64_t seed) {
  if (steps <= 0) fail(ErrorKind::invalid_input, "step count must be positive");
  inst.validate();
  LabelledGraph start = realize_graph(inst, {});

  std::vector<Edge> edges = start.edges;
  EdgeSet present, frozen;
  for (const Edge& e : edges) present.insert(e.u, e.v);
  for (const Edge& e : inst.required.edges) frozen.insert(e.u, e.v);
  EdgeSet banned;
  for (const Edge& e : inst.forbidden.edges) banned.insert(e.u, e.v);
  auto normalized_has = [&](const EdgeSet& s, int a, int b) {
    return s.has(std::min(a, b), std::max(a, b));
  };

  std::mt19937_64 rng(seed);
  const long long m = static_cast<long long>(edges.size());
  long long accepted = 0;

  auto event_holds = [&]() {
    for (const Edge& e : event_graph.edges) {
      const bool in = present.has(e.u, e.v);
      if (kind == EventKind::contains && !in) return false;
      if (kind == EventKind::avoids && in) return false;
    }
    return true;
  };

  auto step_chain = [&]() {
    if (m < 2) return;
    std::uniform_int_distribution<long long> pick(0, m - 1);
    long long i = pick(rng), j = pick(rng);
    if (i == j) return;
    Edge a = edges[i], b = edges[j];
    if (rng() & 1) std::swap(b.u, b.v);
    // replace {a.u-a.v, b.u-b.v} with {a.u-b.u, a.v-b.v}
    if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return;
    if (normalized_has(frozen, a.u, a.v) || normalized_has(frozen, b.u, b.v)) return;
    const int e1u = std::min(a.u, b.u), e1v = std::max(a.u, b.u);
    const int e2u = std::min(a.v, b.v), e2v = std::max(a.v, b.v);
    if (present.has(e1u, e1v) || present.has(e2u, e2v)) return;
    if (banned.has(e1u, e1v) || banned.has(e2u, e2v)) return;
    present.erase(std::min(a.u, a.v), std::max(a.u, a.v));
    present.erase(std::min(b.u, b.v), std::max(b.u, b.v));
    present.insert(e1u, e1v);
    present.insert(e2u, e2v);
    edges[i] = {e1u, e1v};
    edges[j] = {e2u, e2v};
    ++accepted;
  };

  for (long long s = 0; s < burn_in; ++s) step_chain();

  const int batches = static_cast<int>(std::min<long long>(100, steps));
  std::vector<double> batch_means;
  batch_means.reserve(batches);
  long long done = 0, hits_total = 0;
  for (int b = 0; b < batches; ++b) {
    const long long quota = steps * (b + 1) / batches - done;
    long long hits = 0;
    for (long long s = 0; s < quota; ++s) {
      step_chain();
      if (event_holds()) ++hits;
    }
    done += quota;
    hits_total += hits;
    if (quota > 0) batch_means.push_back(static_cast<double>(hits) / static_cast<double>(quota));
  }

  McmcResult res;
  res.estimate = static_cast<double>(hits_total) / static_cast<double>(steps);
  res.std_error = batch_means_std_error(batch_means);
  res.steps = steps;
  res.burn_in = burn_in;
  res.seed = seed;
  res.acceptance_rate = static_cast<double>(accepted) / static_cast<double>(steps + burn_in);
  return res;
}

McmcResult mcmc_estimate_bipartite(const BipartiteInstance& inst, const BipartiteGraph& event_graph,
                                   EventKind kind, long long steps, long long burn_in,
                                   std::uint64_t seed) {
  if (steps <= 0) fail(ErrorKind::invalid_input, "step count must be positive");
  inst.validate();
  BipartiteGraph start = realize_graph(inst, {});

  std::vector<Edge> edges = start.edges;
  EdgeSet present, frozen, banned;
  for (const Edge& e : edges) present.insert(e.u, e.v);
  for (const Edge& e : inst.required.edges) frozen.insert(e.u, e.v);
  for (const Edge& e : inst.forbidden.edges) banned.insert(e.u, e.v);

  std::mt19937_64 rng(seed);
  const long long m = static_cast<long long>(edges.size());
  long long accepted = 0;

  auto event_holds = [&]() {
    for (const Edge& e : event_graph.edges) {
      const bool in = present.has(e.u, e.v);
      if (kind == EventKind::contains && !in) return false;
      if (kind == EventKind::avoids && in) return false;
    }
    return true;
  };

  auto step_chain = [&]() {
    if (m < 2) return;
    std::uniform_int_distribution<long long> pick(0, m - 1);
    long long i = pick(rng), j = pick(rng);
    if (i == j) return;
    const Edge a = edges[i], b = edges[j];
    if (a.u == b.u || a.v == b.v) return;
    if (frozen.has(a.u, a.v) || frozen.has(b.u, b.v)) return;
    if (present.has(a.u, b.v) || present.has(b.u, a.v)) return;
    if (banned.has(a.u, b.v) || banned.has(b.u, a.v)) return;
    present.erase(a.u, a.v);
    present.erase(b.u, b.v);
    present.insert(a.u, b.v);
    present.insert(b.u, a.v);
    edges[i] = {a.u, b.v};
    edges[j] = {b.u, a.v};
    ++accepted;
  };

  for (long long s = 0; s < burn_in; ++s) step_chain();

  const int batches = static_cast<int>(std::min<long long>(100, steps));
  std::vector<double> batch_means;
  batch_means.reserve(batches);
  long long done = 0, hits_total = 0;
  for (int b = 0; b < batches; ++b) {
    const long long quota = steps * (b + 1) / batches - done;
    long long hits = 0;
    for (long long s = 0; s < quota; ++s) {
      step_chain();
      if (event_holds()) ++hits;
    }
    done += quota;
    hits_total += hits;
    if (quota > 0) batch_means.push_back(static_cast<double>(hits) / static_cast<double>(quota));
  }

  McmcResult res;
  res.estimate = static_cast<double>(hits_total) / static_cast<double>(steps);
  res.std_error = batch_means_std_error(batch_means);
  res.steps = steps;
  res.burn_in = burn_in;
  res.seed = seed;
  res.acceptance_rate = static_cast<double>(accepted) / static_cast<double>(steps + burn_in);
  return res;
}

}  // namespace degbound
