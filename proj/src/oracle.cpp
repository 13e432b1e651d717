#include "degbound/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <unordered_set>

#include "degbound/bipartite_bounds.hpp"
#include "degbound/generic_bounds.hpp"

namespace degbound {

std::vector<Edge> GraphView::edge_list() const {
  std::vector<Edge> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (has_edge(u, v)) out.push_back({u, v});
  return out;
}

LabelledGraph GraphView::to_graph() const { return LabelledGraph{n, edge_list()}; }

std::vector<Edge> BipartiteView::edge_list() const {
  std::vector<Edge> out;
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < n; ++v)
      if (has_edge(u, v)) out.push_back({u, v});
  return out;
}

BipartiteGraph BipartiteView::to_graph() const { return BipartiteGraph{m, n, edge_list()}; }

namespace detail {

bool erdos_gallai_graphical(std::vector<int> degrees) {
  std::sort(degrees.begin(), degrees.end(), std::greater<int>());
  const int n = static_cast<int>(degrees.size());
  long long sum = 0;
  for (int d : degrees) {
    if (d < 0 || d > n - 1) return false;
    sum += d;
  }
  if (sum % 2 != 0) return false;
  long long left = 0;
  for (int k = 1; k <= n; ++k) {
    left += degrees[k - 1];
    long long right = static_cast<long long>(k) * (k - 1);
    for (int i = k; i < n; ++i) right += std::min(degrees[i], k);
    if (left > right) return false;
  }
  return true;
}

bool gale_ryser_feasible(std::vector<int> left, std::vector<int> right) {
  std::sort(left.begin(), left.end(), std::greater<int>());
  long long lsum = 0, rsum = 0;
  for (int d : left) {
    if (d < 0 || d > static_cast<int>(right.size())) return false;
    lsum += d;
  }
  for (int d : right) {
    if (d < 0 || d > static_cast<int>(left.size())) return false;
    rsum += d;
  }
  if (lsum != rsum) return false;
  for (int k = 1; k <= static_cast<int>(left.size()); ++k) {
    long long lhs = 0;
    for (int i = 0; i < k; ++i) lhs += left[i];
    long long rhs = 0;
    for (int c : right) rhs += std::min(c, k);
    if (lhs > rhs) return false;
  }
  return true;
}

GenericEnumerator::GenericEnumerator(const ProblemInstance& inst, const EnumLimits& limits)
    : budget_(limits.node_budget) {
  if (inst.required.intersects(inst.forbidden))
    fail(ErrorKind::overlap, "required and forbidden edges overlap");
  n_ = inst.degrees.size();
  if (n_ > 64) fail(ErrorKind::invalid_input, "enumeration supports at most 64 vertices");
  if (inst.required.n != n_ || inst.forbidden.n != n_)
    fail(ErrorKind::invalid_input, "graph vertex count does not match the degree sequence");
  full_mask_ = n_ == 64 ? ~0ULL : (1ULL << n_) - 1;
  residual_ = inst.degrees.degrees;
  adj_.assign(n_, 0);
  blocked_.assign(n_, 0);
  for (int i = 0; i < n_; ++i) blocked_[i] |= 1ULL << i;
  for (const Edge& e : inst.forbidden.edges) {
    blocked_[e.u] |= 1ULL << e.v;
    blocked_[e.v] |= 1ULL << e.u;
  }
  for (const Edge& e : inst.required.edges) {
    adj_[e.u] |= 1ULL << e.v;
    adj_[e.v] |= 1ULL << e.u;
    --residual_[e.u];
    --residual_[e.v];
  }
  long long total = 0;
  for (int r : residual_) {
    if (r < 0) degenerate_empty_ = true;  // required edges exceed the degrees
    total += r;
  }
  if (total % 2 != 0) degenerate_empty_ = true;
}

void GenericEnumerator::bump() {
  if (++nodes_ > budget_) fail(ErrorKind::resource_limit, "enumeration node budget exhausted");
}

bool GenericEnumerator::residual_graphical() const { return erdos_gallai_graphical(residual_); }

BipartiteEnumerator::BipartiteEnumerator(const BipartiteInstance& inst, const EnumLimits& limits)
    : budget_(limits.node_budget) {
  if (inst.required.intersects(inst.forbidden))
    fail(ErrorKind::overlap, "required and forbidden edges overlap");
  m_ = inst.left.size();
  n_ = inst.right.size();
  if (m_ > 64 || n_ > 64) fail(ErrorKind::invalid_input, "enumeration supports at most 64 vertices per part");
  if (inst.required.m != m_ || inst.required.n != n_ || inst.forbidden.m != m_ || inst.forbidden.n != n_)
    fail(ErrorKind::invalid_input, "bipartite graph shape does not match the degree sequences");
  full_mask_ = n_ == 64 ? ~0ULL : (1ULL << n_) - 1;
  left_residual_ = inst.left.degrees;
  right_residual_ = inst.right.degrees;
  adj_.assign(m_, 0);
  blocked_.assign(m_, 0);
  for (const Edge& e : inst.forbidden.edges) blocked_[e.u] |= 1ULL << e.v;
  for (const Edge& e : inst.required.edges) {
    adj_[e.u] |= 1ULL << e.v;
    --left_residual_[e.u];
    --right_residual_[e.v];
  }
  long long lsum = 0, rsum = 0;
  for (int r : left_residual_) {
    if (r < 0) degenerate_empty_ = true;
    lsum += r;
  }
  for (int r : right_residual_) {
    if (r < 0) degenerate_empty_ = true;
    rsum += r;
  }
  if (lsum != rsum) degenerate_empty_ = true;
}

void BipartiteEnumerator::bump() {
  if (++nodes_ > budget_) fail(ErrorKind::resource_limit, "enumeration node budget exhausted");
}

bool BipartiteEnumerator::residual_feasible() const {
  return gale_ryser_feasible(left_residual_, right_residual_);
}

}  // namespace detail

ClassCount enumerate_class(const ProblemInstance& inst, const EnumLimits& limits) {
  detail::GenericEnumerator e(inst, limits);
  long long c = e.run([](const GraphView&) {});
  return ClassCount{BigInt(static_cast<long>(c)), c > 0};
}

ClassCount enumerate_class(const ProblemInstance& inst, const EnumLimits& limits,
                           const std::function<void(const GraphView&)>& cb) {
  detail::GenericEnumerator e(inst, limits);
  long long c = e.run([&](const GraphView& g) { cb(g); });
  return ClassCount{BigInt(static_cast<long>(c)), c > 0};
}

ClassCount enumerate_class(const BipartiteInstance& inst, const EnumLimits& limits) {
  detail::BipartiteEnumerator e(inst, limits);
  long long c = e.run([](const BipartiteView&) {});
  return ClassCount{BigInt(static_cast<long>(c)), c > 0};
}

ClassCount enumerate_class(const BipartiteInstance& inst, const EnumLimits& limits,
                           const std::function<void(const BipartiteView&)>& cb) {
  detail::BipartiteEnumerator e(inst, limits);
  long long c = e.run([&](const BipartiteView& g) { cb(g); });
  return ClassCount{BigInt(static_cast<long>(c)), c > 0};
}

namespace {

Rational rat(long long v) { return Rational(static_cast<long>(v)); }

long long count_only(const ProblemInstance& inst, const EnumLimits& limits) {
  detail::GenericEnumerator e(inst, limits);
  return e.run([](const GraphView&) {});
}

long long count_only(const BipartiteInstance& inst, const EnumLimits& limits) {
  detail::BipartiteEnumerator e(inst, limits);
  return e.run([](const BipartiteView&) {});
}

}  // namespace

Rational exact_probability(const ProblemInstance& base, const LabelledGraph& event_graph,
                           EventKind kind, const EnumLimits& limits) {
  const long long denom = count_only(base, limits);
  if (denom == 0) fail(ErrorKind::infeasible_base, "base class is empty");
  ProblemInstance target = base;
  if (kind == EventKind::contains)
    target.required = base.required.union_with(event_graph);
  else
    target.forbidden = base.forbidden.union_with(event_graph);
  if (target.required.intersects(target.forbidden)) return Rational(0);
  const long long num = count_only(target, limits);
  return make_rational(num, denom);
}

Rational exact_probability(const BipartiteInstance& base, const BipartiteGraph& event_graph,
                           EventKind kind, const EnumLimits& limits) {
  const long long denom = count_only(base, limits);
  if (denom == 0) fail(ErrorKind::infeasible_base, "base class is empty");
  BipartiteInstance target = base;
  if (kind == EventKind::contains)
    target.required = base.required.union_with(event_graph);
  else
    target.forbidden = base.forbidden.union_with(event_graph);
  if (target.required.intersects(target.forbidden)) return Rational(0);
  const long long num = count_only(target, limits);
  return make_rational(num, denom);
}

Rational exact_ratio(const DegreeSequence& d, const LabelledGraph& h, const LabelledGraph& l,
                     Edge uv, const EnumLimits& limits) {
  const long long num = count_only({d, h.plus_edge(uv), l}, limits);
  const long long den = count_only({d, h, l.plus_edge(uv)}, limits);
  if (den == 0) fail(ErrorKind::infeasible_denominator, "denominator class is empty");
  return make_rational(num, den);
}

Rational exact_ratio_bipartite(const DegreeSequence& s, const DegreeSequence& t,
                               const BipartiteGraph& h, const BipartiteGraph& l, Edge uv,
                               const EnumLimits& limits) {
  const long long num = count_only({s, t, h.plus_edge(uv), l}, limits);
  const long long den = count_only({s, t, h, l.plus_edge(uv)}, limits);
  if (den == 0) fail(ErrorKind::infeasible_denominator, "denominator class is empty");
  return make_rational(num, den);
}

namespace switching {

std::vector<std::uint64_t> adjacency_masks(const LabelledGraph& g) {
  std::vector<std::uint64_t> adj(g.n, 0);
  for (const Edge& e : g.edges) {
    adj[e.u] |= 1ULL << e.v;
    adj[e.v] |= 1ULL << e.u;
  }
  return adj;
}

std::vector<std::uint64_t> adjacency_masks(const BipartiteGraph& g) {
  std::vector<std::uint64_t> adj(g.m, 0);
  for (const Edge& e : g.edges) adj[e.u] |= 1ULL << e.v;
  return adj;
}

// Ordered pairs (x, y) with xy an edge of G other than uv, both endpoints off
// {u, v}, and ux, vy absent from both G and M.
long long forward_two(const GraphView& g, Edge uv, const std::uint64_t* m_adj) {
  const int u = uv.u, v = uv.v;
  long long count = 0;
  for (int x = 0; x < g.n; ++x) {
    if (x == u || x == v) continue;
    if (g.has_edge(u, x) || ((m_adj[u] >> x) & 1ULL)) continue;
    for (int y = 0; y < g.n; ++y) {
      if (!g.has_edge(x, y)) continue;
      if (y == u || y == v) continue;
      if (g.has_edge(v, y) || ((m_adj[v] >> y) & 1ULL)) continue;
      ++count;
    }
  }
  return count;
}

// Ordered pairs (x, y) with ux, vy edges of G, x != y, and xy absent from
// both G and M.
long long backward_two(const GraphView& g, Edge uv, const std::uint64_t* m_adj) {
  const int u = uv.u, v = uv.v;
  long long count = 0;
  for (int x = 0; x < g.n; ++x) {
    if (!g.has_edge(u, x)) continue;
    for (int y = 0; y < g.n; ++y) {
      if (!g.has_edge(v, y)) continue;
      if (x == y) continue;
      if (g.has_edge(x, y) || ((m_adj[x] >> y) & 1ULL)) continue;
      ++count;
    }
  }
  return count;
}

// Ordered 4-tuples (x, a, y, b) with xa, yb edges of G; all six vertices
// distinct except x = y is permitted; ux, vy, ab absent from G and M.
long long forward_three(const GraphView& g, Edge uv, const std::uint64_t* m_adj) {
  const int u = uv.u, v = uv.v;
  long long count = 0;
  for (int x = 0; x < g.n; ++x) {
    if (x == u || x == v) continue;
    if (g.has_edge(u, x) || ((m_adj[u] >> x) & 1ULL)) continue;
    for (int a = 0; a < g.n; ++a) {
      if (!g.has_edge(x, a)) continue;
      if (a == u || a == v) continue;
      for (int y = 0; y < g.n; ++y) {
        if (y == u || y == v || y == a) continue;
        if (g.has_edge(v, y) || ((m_adj[v] >> y) & 1ULL)) continue;
        for (int b = 0; b < g.n; ++b) {
          if (!g.has_edge(y, b)) continue;
          if (b == u || b == v || b == a || b == x) continue;
          if (g.has_edge(a, b) || ((m_adj[a] >> b) & 1ULL)) continue;
          ++count;
        }
      }
    }
  }
  return count;
}

// Ordered 4-tuples (x, a, y, b) with ux, vy, ab edges of G; a, b off {u, v};
// x off {a, b} with xa absent from G and M; y off {a, b} with yb absent too.
long long backward_three(const GraphView& g, Edge uv, const std::uint64_t* m_adj) {
  const int u = uv.u, v = uv.v;
  long long count = 0;
  for (int x = 0; x < g.n; ++x) {
    if (!g.has_edge(u, x)) continue;
    for (int y = 0; y < g.n; ++y) {
      if (!g.has_edge(v, y)) continue;
      for (int a = 0; a < g.n; ++a) {
        if (a == u || a == v) continue;
        if (a == x || a == y) continue;
        if (g.has_edge(x, a) || ((m_adj[x] >> a) & 1ULL)) continue;
        for (int b = 0; b < g.n; ++b) {
          if (!g.has_edge(a, b)) continue;
          if (b == u || b == v) continue;
          if (b == x || b == y) continue;
          if (g.has_edge(y, b) || ((m_adj[y] >> b) & 1ULL)) continue;
          ++count;
        }
      }
    }
  }
  return count;
}

// Pairs (x, y) in S x T with xy an edge of G other than uv, x != u, y != v,
// and uy, xv absent from G and M.
long long forward_two(const BipartiteView& g, Edge uv, const std::uint64_t* m_adj) {
  const int u = uv.u, v = uv.v;
  long long count = 0;
  for (int x = 0; x < g.m; ++x) {
    if (x == u) continue;
    if (g.has_edge(x, v) || ((m_adj[x] >> v) & 1ULL)) continue;
    for (int y = 0; y < g.n; ++y) {
      if (!g.has_edge(x, y)) continue;
      if (y == v) continue;
      if (g.has_edge(u, y) || ((m_adj[u] >> y) & 1ULL)) continue;
      ++count;
    }
  }
  return count;
}

// Pairs (x, y) in S x T with uy, xv edges of G and xy absent from G and M.
long long backward_two(const BipartiteView& g, Edge uv, const std::uint64_t* m_adj) {
  const int u = uv.u, v = uv.v;
  long long count = 0;
  for (int x = 0; x < g.m; ++x) {
    if (!g.has_edge(x, v)) continue;
    for (int y = 0; y < g.n; ++y) {
      if (!g.has_edge(u, y)) continue;
      if (g.has_edge(x, y) || ((m_adj[x] >> y) & 1ULL)) continue;
      ++count;
    }
  }
  return count;
}

// Tuples (y, a, x, b) in S^2 x T^2 with ax, yb edges of G, all six vertices
// distinct (within their parts), and ux, yv, ab absent from G and M.
long long forward_three(const BipartiteView& g, Edge uv, const std::uint64_t* m_adj) {
  const int u = uv.u, v = uv.v;
  long long count = 0;
  for (int y = 0; y < g.m; ++y) {
    if (y == u) continue;
    if (g.has_edge(y, v) || ((m_adj[y] >> v) & 1ULL)) continue;
    for (int b = 0; b < g.n; ++b) {
      if (!g.has_edge(y, b)) continue;
      if (b == v) continue;
      for (int a = 0; a < g.m; ++a) {
        if (a == u || a == y) continue;
        for (int x = 0; x < g.n; ++x) {
          if (!g.has_edge(a, x)) continue;
          if (x == v || x == b) continue;
          if (g.has_edge(u, x) || ((m_adj[u] >> x) & 1ULL)) continue;
          if (g.has_edge(a, b) || ((m_adj[a] >> b) & 1ULL)) continue;
          ++count;
        }
      }
    }
  }
  return count;
}

// Tuples (y, a, x, b) in S^2 x T^2 with ux, yv, ab edges of G, a != u,
// b != v, x != b with ax absent, and y != a with yb absent.
long long backward_three(const BipartiteView& g, Edge uv, const std::uint64_t* m_adj) {
  const int u = uv.u, v = uv.v;
  long long count = 0;
  for (int x = 0; x < g.n; ++x) {
    if (!g.has_edge(u, x)) continue;
    for (int y = 0; y < g.m; ++y) {
      if (!g.has_edge(y, v)) continue;
      for (int a = 0; a < g.m; ++a) {
        if (a == u || a == y) continue;
        if (g.has_edge(a, x) || ((m_adj[a] >> x) & 1ULL)) continue;
        for (int b = 0; b < g.n; ++b) {
          if (!g.has_edge(a, b)) continue;
          if (b == v || b == x) continue;
          if (g.has_edge(y, b) || ((m_adj[y] >> b) & 1ULL)) continue;
          ++count;
        }
      }
    }
  }
  return count;
}

}  // namespace switching

SwitchingCensus switching_census(const DegreeSequence& d, Edge uv, const LabelledGraph& m_graph,
                                 int arity, SwitchDirection direction, const EnumLimits& limits) {
  if (arity != 2 && arity != 3) fail(ErrorKind::invalid_input, "switching arity must be 2 or 3");
  if (m_graph.has_edge(uv.u, uv.v)) fail(ErrorKind::invalid_input, "distinguished edge is forbidden");
  SwitchingCensus census;
  census.arity = arity;
  census.direction = direction;
  auto m_adj = switching::adjacency_masks(m_graph);
  ProblemInstance inst{d, LabelledGraph::empty(d.size()), m_graph};
  if (direction == SwitchDirection::forward)
    inst.required = LabelledGraph::from_edges(d.size(), {uv});
  else
    inst.forbidden = m_graph.plus_edge(uv);
  detail::GenericEnumerator e(inst, limits);
  e.run([&](const GraphView& g) {
    long long c;
    if (direction == SwitchDirection::forward)
      c = arity == 2 ? switching::forward_two(g, uv, m_adj.data())
                     : switching::forward_three(g, uv, m_adj.data());
    else
      c = arity == 2 ? switching::backward_two(g, uv, m_adj.data())
                     : switching::backward_three(g, uv, m_adj.data());
    census.per_graph.push_back(c);
    census.class_total += c;
  });
  return census;
}

SwitchingCensus switching_census_bipartite(const DegreeSequence& s, const DegreeSequence& t, Edge uv,
                                           const BipartiteGraph& m_graph, int arity,
                                           SwitchDirection direction, const EnumLimits& limits) {
  if (arity != 2 && arity != 3) fail(ErrorKind::invalid_input, "switching arity must be 2 or 3");
  if (m_graph.has_edge(uv.u, uv.v)) fail(ErrorKind::invalid_input, "distinguished edge is forbidden");
  SwitchingCensus census;
  census.arity = arity;
  census.direction = direction;
  auto m_adj = switching::adjacency_masks(m_graph);
  BipartiteInstance inst{s, t, BipartiteGraph::empty(s.size(), t.size()), m_graph};
  if (direction == SwitchDirection::forward)
    inst.required = BipartiteGraph::from_edges(s.size(), t.size(), {uv});
  else
    inst.forbidden = m_graph.plus_edge(uv);
  detail::BipartiteEnumerator e(inst, limits);
  e.run([&](const BipartiteView& g) {
    long long c;
    if (direction == SwitchDirection::forward)
      c = arity == 2 ? switching::forward_two(g, uv, m_adj.data())
                     : switching::forward_three(g, uv, m_adj.data());
    else
      c = arity == 2 ? switching::backward_two(g, uv, m_adj.data())
                     : switching::backward_three(g, uv, m_adj.data());
    census.per_graph.push_back(c);
    census.class_total += c;
  });
  return census;
}

std::vector<std::vector<int>> canonical_degree_sequences(int n, int max_sum) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(n, 0);
  auto rec = [&](auto&& self, int index, int cap, int remaining) -> void {
    if (index == n) {
      if ((std::accumulate(current.begin(), current.end(), 0) % 2) == 0) out.push_back(current);
      return;
    }
    for (int v = std::min(cap, remaining); v >= 0; --v) {
      current[index] = v;
      self(self, index + 1, v, remaining - v);
    }
  };
  rec(rec, 0, n - 1 >= 0 ? n - 1 : 0, max_sum);
  return out;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> canonical_bipartite_sequences(
    int m, int n, int max_sum) {
  auto sorted_tuples = [](int len, int cap, int max_total) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(len, 0);
    auto rec = [&](auto&& self, int index, int bound, int remaining) -> void {
      if (index == len) {
        out.push_back(current);
        return;
      }
      for (int v = std::min(bound, remaining); v >= 0; --v) {
        current[index] = v;
        self(self, index + 1, v, remaining - v);
      }
    };
    rec(rec, 0, cap, max_total);
    return out;
  };
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  auto ss = sorted_tuples(m, n, max_sum);
  auto ts = sorted_tuples(n, m, max_sum);
  for (const auto& s : ss) {
    const int s_sum = std::accumulate(s.begin(), s.end(), 0);
    for (const auto& t : ts)
      if (std::accumulate(t.begin(), t.end(), 0) == s_sum) out.emplace_back(s, t);
  }
  return out;
}

namespace {

std::string describe_generic(const std::vector<int>& d, const LabelledGraph& m_graph, Edge uv) {
  std::ostringstream os;
  os << "d=(";
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ") uv=(" << uv.u << "," << uv.v << ") M={";
  for (std::size_t i = 0; i < m_graph.edges.size(); ++i)
    os << (i ? " " : "") << m_graph.edges[i].u << "-" << m_graph.edges[i].v;
  os << "}";
  return os.str();
}

std::string describe_bipartite(const std::vector<int>& s, const std::vector<int>& t,
                               const BipartiteGraph& m_graph, Edge uv) {
  std::ostringstream os;
  os << "s=(";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ") t=(";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ") uv=(" << uv.u << "," << uv.v << ") M={";
  for (std::size_t i = 0; i < m_graph.edges.size(); ++i)
    os << (i ? " " : "") << m_graph.edges[i].u << "-" << m_graph.edges[i].v;
  os << "}";
  return os.str();
}

struct ClaimChecker {
  ClaimSweepReport& report;

  void check(bool ok, const std::string& description) {
    ++report.claims_checked;
    if (!ok) {
      ++report.violations;
      if (report.first_violation.empty()) report.first_violation = description;
    }
  }
};

}  // namespace

ClaimSweepReport verify_claims(const ClaimSweepConfig& config) {
  ClaimSweepReport report;
  ClaimChecker checker{report};
  EnumLimits limits{config.node_budget};
  std::mt19937_64 rng(config.seed);

  if (config.generic) {
    for (int n = 2; n <= config.max_n; ++n) {
      std::vector<Edge> all_edges;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_edges.push_back({u, v});
      for (const auto& degs : canonical_degree_sequences(n, config.max_degree_sum)) {
        DegreeSequence d(degs);
        if (!detail::erdos_gallai_graphical(degs)) continue;
        std::vector<LabelledGraph> m_choices = {LabelledGraph::empty(n)};
        {
          std::vector<Edge> pool = all_edges;
          std::shuffle(pool.begin(), pool.end(), rng);
          std::vector<Edge> chosen(pool.begin(),
                                   pool.begin() + std::min<std::size_t>(config.random_forbidden_edges,
                                                                        pool.size()));
          m_choices.push_back(LabelledGraph::from_edges(n, chosen));
        }
        for (const LabelledGraph& m_graph : m_choices) {
          auto m_adj = switching::adjacency_masks(m_graph);
          for (const Edge& uv : all_edges) {
            if (m_graph.has_edge(uv.u, uv.v)) continue;
            ++report.classes_checked;
            const std::string where = describe_generic(degs, m_graph, uv);
            const long long two_m = d.sum();
            const long long dudv = static_cast<long long>(d[uv.u]) * d[uv.v];

            ProblemInstance fwd{d, LabelledGraph::from_edges(n, {uv}), m_graph};
            ProblemInstance bwd{d, LabelledGraph::empty(n), m_graph.plus_edge(uv)};
            std::vector<std::uint64_t> fwd_adjs, bwd_adjs;  // flattened n-word rows
            detail::GenericEnumerator fe(fwd, limits);
            long long fwd_count = fe.run([&](const GraphView& g) {
              fwd_adjs.insert(fwd_adjs.end(), g.adj, g.adj + n);
            });
            detail::GenericEnumerator be(bwd, limits);
            long long bwd_count = be.run([&](const GraphView& g) {
              bwd_adjs.insert(bwd_adjs.end(), g.adj, g.adj + n);
            });
            report.graphs_checked += fwd_count + bwd_count;

            Rational f_val = 0, g_val = 0;
            const bool terms_defined = two_m > 0;
            if (terms_defined) {
              f_val = f_term(d, LabelledGraph::empty(n), m_graph, uv);
              g_val = g_term(d, LabelledGraph::empty(n), m_graph, uv);
            }

            long long fwd2_total = 0, fwd3_total = 0;
            for (long long i = 0; i < fwd_count; ++i) {
              GraphView g{n, fwd_adjs.data() + i * n};
              const long long f2 = switching::forward_two(g, uv, m_adj.data());
              fwd2_total += f2;
              checker.check(!terms_defined || rat(f2) >= rat(two_m) * f_val,
                            "forward 2-switching lower bound at " + where);
              if (n <= config.three_switch_max_n) {
                const long long f3 = switching::forward_three(g, uv, m_adj.data());
                fwd3_total += f3;
                checker.check(f3 <= two_m * two_m, "forward 3-switching upper bound at " + where);
              }
            }
            long long bwd2_total = 0, bwd3_total = 0;
            for (long long i = 0; i < bwd_count; ++i) {
              GraphView g{n, bwd_adjs.data() + i * n};
              const long long b2 = switching::backward_two(g, uv, m_adj.data());
              bwd2_total += b2;
              checker.check(b2 <= dudv, "backward 2-switching upper bound at " + where);
              if (n <= config.three_switch_max_n) {
                const long long b3 = switching::backward_three(g, uv, m_adj.data());
                bwd3_total += b3;
                checker.check(b3 <= two_m * dudv, "backward 3-switching upper bound at " + where);
                checker.check(!terms_defined || rat(b3) >= rat(two_m) * rat(dudv) * g_val,
                              "backward 3-switching lower bound at " + where);
              }
            }
            checker.check(fwd2_total == bwd2_total, "2-switching double counting at " + where);
            if (n <= config.three_switch_max_n)
              checker.check(fwd3_total == bwd3_total, "3-switching double counting at " + where);

            // class-ratio bracket from the switching counts
            if (bwd_count > 0 && terms_defined) {
              Rational ratio = make_rational(fwd_count, bwd_count);
              checker.check(ratio >= rat(dudv) / rat(two_m) * g_val,
                            "ratio lower bracket at " + where);
              if (f_val > 0)
                checker.check(ratio <= rat(dudv) / rat(two_m) / f_val,
                              "ratio upper bracket at " + where);
            }
          }
        }
      }
    }
  }

  if (config.bipartite) {
    for (int m = 1; m <= config.bipartite_max_side; ++m) {
      for (int n = 1; n <= config.bipartite_max_side; ++n) {
        std::vector<Edge> all_edges;
        for (int u = 0; u < m; ++u)
          for (int v = 0; v < n; ++v) all_edges.push_back({u, v});
        for (const auto& [sdegs, tdegs] : canonical_bipartite_sequences(m, n, config.bipartite_max_sum)) {
          DegreeSequence s(sdegs, Part::bipartite_left);
          DegreeSequence t(tdegs, Part::bipartite_right);
          if (!detail::gale_ryser_feasible(sdegs, tdegs)) continue;
          std::vector<BipartiteGraph> m_choices = {BipartiteGraph::empty(m, n)};
          {
            std::vector<Edge> pool = all_edges;
            std::shuffle(pool.begin(), pool.end(), rng);
            std::vector<Edge> chosen(pool.begin(),
                                     pool.begin() + std::min<std::size_t>(config.random_forbidden_edges,
                                                                          pool.size()));
            m_choices.push_back(BipartiteGraph::from_edges(m, n, chosen));
          }
          for (const BipartiteGraph& m_graph : m_choices) {
            auto m_adj = switching::adjacency_masks(m_graph);
            for (const Edge& uv : all_edges) {
              if (m_graph.has_edge(uv.u, uv.v)) continue;
              ++report.classes_checked;
              const std::string where = describe_bipartite(sdegs, tdegs, m_graph, uv);
              const long long m_g = s.sum();
              const long long sutv = static_cast<long long>(s[uv.u]) * t[uv.v];

              BipartiteInstance fwd{s, t, BipartiteGraph::from_edges(m, n, {uv}), m_graph};
              BipartiteInstance bwd{s, t, BipartiteGraph::empty(m, n), m_graph.plus_edge(uv)};
              std::vector<std::uint64_t> fwd_adjs, bwd_adjs;
              detail::BipartiteEnumerator fe(fwd, limits);
              long long fwd_count = fe.run([&](const BipartiteView& g) {
                fwd_adjs.insert(fwd_adjs.end(), g.adj, g.adj + m);
              });
              detail::BipartiteEnumerator be(bwd, limits);
              long long bwd_count = be.run([&](const BipartiteView& g) {
                bwd_adjs.insert(bwd_adjs.end(), g.adj, g.adj + m);
              });
              report.graphs_checked += fwd_count + bwd_count;

              Rational p_val = 0, q_val = 0;
              const bool terms_defined = m_g > 0;
              if (terms_defined) {
                p_val = p_term(s, t, BipartiteGraph::empty(m, n), m_graph, uv);
                q_val = q_term(s, t, BipartiteGraph::empty(m, n), m_graph, uv);
              }

              long long fwd2_total = 0, fwd3_total = 0;
              for (long long i = 0; i < fwd_count; ++i) {
                BipartiteView g{m, n, fwd_adjs.data() + i * m};
                const long long f2 = switching::forward_two(g, uv, m_adj.data());
                fwd2_total += f2;
                checker.check(!terms_defined || rat(f2) >= rat(m_g) * p_val,
                              "bipartite forward 2-switching lower bound at " + where);
                const long long f3 = switching::forward_three(g, uv, m_adj.data());
                fwd3_total += f3;
                checker.check(f3 <= m_g * m_g, "bipartite forward 3-switching upper bound at " + where);
              }
              long long bwd2_total = 0, bwd3_total = 0;
              for (long long i = 0; i < bwd_count; ++i) {
                BipartiteView g{m, n, bwd_adjs.data() + i * m};
                const long long b2 = switching::backward_two(g, uv, m_adj.data());
                bwd2_total += b2;
                checker.check(b2 <= sutv, "bipartite backward 2-switching upper bound at " + where);
                const long long b3 = switching::backward_three(g, uv, m_adj.data());
                bwd3_total += b3;
                checker.check(b3 <= m_g * sutv, "bipartite backward 3-switching upper bound at " + where);
                checker.check(!terms_defined || rat(b3) >= rat(m_g) * rat(sutv) * q_val,
                              "bipartite backward 3-switching lower bound at " + where);
              }
              checker.check(fwd2_total == bwd2_total, "bipartite 2-switching double counting at " + where);
              checker.check(fwd3_total == bwd3_total, "bipartite 3-switching double counting at " + where);

              if (bwd_count > 0 && terms_defined) {
                Rational ratio = make_rational(fwd_count, bwd_count);
                checker.check(ratio >= rat(sutv) / rat(m_g) * q_val,
                              "bipartite ratio lower bracket at " + where);
                if (p_val > 0)
                  checker.check(ratio <= rat(sutv) / rat(m_g) / p_val,
                                "bipartite ratio upper bracket at " + where);
              }
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace degbound
