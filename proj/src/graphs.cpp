#include "degbound/graphs.hpp"

#include <algorithm>

namespace degbound {

DegreeSequence zeros(int n, Part part) { return DegreeSequence(std::vector<int>(n, 0), part); }

DegreeSequence add(const DegreeSequence& a, const DegreeSequence& b) {
  if (a.size() != b.size()) fail(ErrorKind::invalid_input, "degree sequence length mismatch");
  std::vector<int> out(a.degrees);
  for (int i = 0; i < b.size(); ++i) out[i] += b[i];
  return DegreeSequence(std::move(out), a.part);
}

DegreeSequence subtract(const DegreeSequence& a, const DegreeSequence& b) {
  if (a.size() != b.size()) fail(ErrorKind::invalid_input, "degree sequence length mismatch");
  std::vector<int> out(a.degrees);
  for (int i = 0; i < b.size(); ++i) {
    out[i] -= b[i];
    if (out[i] < 0) fail(ErrorKind::negative_degree, "degree subtraction went negative");
  }
  return DegreeSequence(std::move(out), a.part);
}

namespace {

std::vector<Edge> normalize_edges(std::vector<Edge> es, bool swap_endpoints) {
  if (swap_endpoints) {
    for (Edge& e : es) {
      if (e.u == e.v) fail(ErrorKind::invalid_input, "self-loop");
      if (e.u > e.v) std::swap(e.u, e.v);
    }
  }
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end())
    fail(ErrorKind::invalid_input, "duplicate edge");
  return es;
}

template <class G>
bool sorted_has_edge(const G& g, int u, int v) {
  return std::binary_search(g.edges.begin(), g.edges.end(), Edge{u, v});
}

template <class G>
bool sorted_intersects(const G& a, const G& b) {
  auto i = a.edges.begin();
  auto j = b.edges.begin();
  while (i != a.edges.end() && j != b.edges.end()) {
    if (*i == *j) return true;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return false;
}

std::vector<Edge> sorted_union(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  std::vector<Edge> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Edge> sorted_difference(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  std::vector<Edge> out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

LabelledGraph LabelledGraph::from_edges(int n, std::vector<Edge> es) {
  es = normalize_edges(std::move(es), /*swap_endpoints=*/true);
  for (const Edge& e : es)
    if (e.u < 0 || e.v >= n) fail(ErrorKind::invalid_input, "edge endpoint out of range");
  return LabelledGraph{n, std::move(es)};
}

bool LabelledGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return sorted_has_edge(*this, u, v);
}

bool LabelledGraph::intersects(const LabelledGraph& other) const { return sorted_intersects(*this, other); }

LabelledGraph LabelledGraph::union_with(const LabelledGraph& other) const {
  return LabelledGraph{n, sorted_union(edges, other.edges)};
}

LabelledGraph LabelledGraph::minus(const LabelledGraph& other) const {
  return LabelledGraph{n, sorted_difference(edges, other.edges)};
}

LabelledGraph LabelledGraph::plus_edge(Edge e) const {
  if (e.u > e.v) std::swap(e.u, e.v);
  auto es = edges;
  es.insert(std::upper_bound(es.begin(), es.end(), e), e);
  return LabelledGraph{n, std::move(es)};
}

BipartiteGraph BipartiteGraph::from_edges(int m, int n, std::vector<Edge> es) {
  es = normalize_edges(std::move(es), /*swap_endpoints=*/false);
  for (const Edge& e : es)
    if (e.u < 0 || e.u >= m || e.v < 0 || e.v >= n)
      fail(ErrorKind::invalid_input, "bipartite edge endpoint out of range");
  return BipartiteGraph{m, n, std::move(es)};
}

bool BipartiteGraph::has_edge(int u, int v) const { return sorted_has_edge(*this, u, v); }

bool BipartiteGraph::intersects(const BipartiteGraph& other) const { return sorted_intersects(*this, other); }

BipartiteGraph BipartiteGraph::union_with(const BipartiteGraph& other) const {
  return BipartiteGraph{m, n, sorted_union(edges, other.edges)};
}

BipartiteGraph BipartiteGraph::minus(const BipartiteGraph& other) const {
  return BipartiteGraph{m, n, sorted_difference(edges, other.edges)};
}

BipartiteGraph BipartiteGraph::plus_edge(Edge e) const {
  auto es = edges;
  es.insert(std::upper_bound(es.begin(), es.end(), e), e);
  return BipartiteGraph{m, n, std::move(es)};
}

DegreeSequence degree_sequence_of(const LabelledGraph& g) {
  std::vector<int> d(g.n, 0);
  for (const Edge& e : g.edges) {
    ++d[e.u];
    ++d[e.v];
  }
  return DegreeSequence(std::move(d), Part::generic);
}

std::pair<DegreeSequence, DegreeSequence> degree_sequence_of(const BipartiteGraph& g) {
  std::vector<int> s(g.m, 0), t(g.n, 0);
  for (const Edge& e : g.edges) {
    ++s[e.u];
    ++t[e.v];
  }
  return {DegreeSequence(std::move(s), Part::bipartite_left),
          DegreeSequence(std::move(t), Part::bipartite_right)};
}

long long edge_count(const LabelledGraph& g) { return g.edge_count(); }
long long edge_count(const BipartiteGraph& g) { return g.edge_count(); }

std::vector<int> boundary(const LabelledGraph& g) {
  std::vector<int> out;
  for (const Edge& e : g.edges) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<std::vector<int>, std::vector<int>> boundary(const BipartiteGraph& g) {
  std::vector<int> left, right;
  for (const Edge& e : g.edges) {
    left.push_back(e.u);
    right.push_back(e.v);
  }
  std::sort(left.begin(), left.end());
  left.erase(std::unique(left.begin(), left.end()), left.end());
  std::sort(right.begin(), right.end());
  right.erase(std::unique(right.begin(), right.end()), right.end());
  return {left, right};
}

namespace {
int max_over(const DegreeSequence& g, const std::vector<int>& vertices) {
  bool seen = false;
  int best = 0;
  for (int w : vertices) {
    if (w < 0 || w >= g.size()) continue;
    if (!seen || g[w] > best) best = g[w];
    seen = true;
  }
  if (!seen) fail(ErrorKind::empty_intersection, "boundary does not meet the degree sequence's vertex set");
  return best;
}
}  // namespace

int restricted_max_degree(const DegreeSequence& g, const LabelledGraph& x) {
  return max_over(g, boundary(x));
}

int restricted_max_degree(const DegreeSequence& g, const BipartiteGraph& x) {
  auto [left, right] = boundary(x);
  if (g.part == Part::bipartite_right) return max_over(g, right);
  return max_over(g, left);
}

void ProblemInstance::validate() const {
  const int n = degrees.size();
  if (required.n != n || forbidden.n != n)
    fail(ErrorKind::invalid_input, "graph vertex count does not match the degree sequence");
  if (required.intersects(forbidden))
    fail(ErrorKind::overlap, "required and forbidden edges overlap");
  DegreeSequence req = degree_sequence_of(required);
  for (int i = 0; i < n; ++i)
    if (req[i] > degrees[i])
      fail(ErrorKind::negative_degree, "required edges exceed the target degree at a vertex");
}

void BipartiteInstance::validate() const {
  const int m = left.size(), n = right.size();
  if (required.m != m || required.n != n || forbidden.m != m || forbidden.n != n)
    fail(ErrorKind::invalid_input, "bipartite graph shape does not match the degree sequences");
  if (left.sum() != right.sum())
    fail(ErrorKind::invalid_input, "left and right degree sums differ");
  if (required.intersects(forbidden))
    fail(ErrorKind::overlap, "required and forbidden edges overlap");
  auto [s, t] = degree_sequence_of(required);
  for (int i = 0; i < m; ++i)
    if (s[i] > left[i]) fail(ErrorKind::negative_degree, "required edges exceed the left degrees");
  for (int j = 0; j < n; ++j)
    if (t[j] > right[j]) fail(ErrorKind::negative_degree, "required edges exceed the right degrees");
}

ProblemInstance reduce_conditioning(const DegreeSequence& d, const LabelledGraph& h,
                                    const LabelledGraph& l, const LabelledGraph& x) {
  if (x.intersects(l)) fail(ErrorKind::overlap, "target and forbidden edges overlap");
  for (const Edge& e : h.edges)
    if (!x.has_edge(e.u, e.v)) fail(ErrorKind::invalid_input, "conditioning edges must lie inside the target");
  DegreeSequence residual = subtract(d, degree_sequence_of(h));
  return ProblemInstance{std::move(residual), x.minus(h), l.union_with(h)};
}

}  // namespace degbound
