#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "degbound/errors.hpp"
#include "degbound/rational.hpp"

namespace degbound {

enum class Part { generic, bipartite_left, bipartite_right };

// A vector of vertex degrees indexed by 0-based vertex label. All bound and
// oracle code treats these as immutable values.
struct DegreeSequence {
  std::vector<int> degrees;
  Part part = Part::generic;

  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<int> d, Part p = Part::generic) : degrees(std::move(d)), part(p) {
    for (int x : degrees)
      if (x < 0) fail(ErrorKind::negative_degree, "degree sequence has a negative entry");
  }

  int size() const { return static_cast<int>(degrees.size()); }
  int operator[](int i) const { return degrees[i]; }
  long long sum() const {
    long long s = 0;
    for (int x : degrees) s += x;
    return s;
  }
  int max_degree() const {
    int m = 0;
    for (int x : degrees) m = m > x ? m : x;
    return m;
  }
  bool operator==(const DegreeSequence& other) const { return degrees == other.degrees; }
};

DegreeSequence zeros(int n, Part part = Part::generic);
DegreeSequence add(const DegreeSequence& a, const DegreeSequence& b);
// Throws Error{negative_degree} if any entry would go negative.
DegreeSequence subtract(const DegreeSequence& a, const DegreeSequence& b);

// For a generic graph u < v; for a bipartite graph u indexes the left part and
// v the right part.
struct Edge {
  int u = 0, v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple labelled graph stored as a sorted edge list. No loops, no multi-edges.
struct LabelledGraph {
  int n = 0;
  std::vector<Edge> edges;  // sorted, unique, u < v

  static LabelledGraph empty(int n) { return LabelledGraph{n, {}}; }
  // Normalizes endpoint order, sorts, and validates (bounds, loops, duplicates).
  static LabelledGraph from_edges(int n, std::vector<Edge> es);

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_edge(int u, int v) const;
  bool intersects(const LabelledGraph& other) const;
  LabelledGraph union_with(const LabelledGraph& other) const;
  LabelledGraph minus(const LabelledGraph& other) const;
  LabelledGraph plus_edge(Edge e) const;
  bool operator==(const LabelledGraph& other) const { return n == other.n && edges == other.edges; }
};

struct BipartiteGraph {
  int m = 0, n = 0;         // |S| and |T|
  std::vector<Edge> edges;  // sorted, unique; u < m, v < n

  static BipartiteGraph empty(int m, int n) { return BipartiteGraph{m, n, {}}; }
  static BipartiteGraph from_edges(int m, int n, std::vector<Edge> es);

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_edge(int u, int v) const;
  bool intersects(const BipartiteGraph& other) const;
  BipartiteGraph union_with(const BipartiteGraph& other) const;
  BipartiteGraph minus(const BipartiteGraph& other) const;
  BipartiteGraph plus_edge(Edge e) const;
  bool operator==(const BipartiteGraph& other) const {
    return m == other.m && n == other.n && edges == other.edges;
  }
};

DegreeSequence degree_sequence_of(const LabelledGraph& g);
std::pair<DegreeSequence, DegreeSequence> degree_sequence_of(const BipartiteGraph& g);

long long edge_count(const LabelledGraph& g);
long long edge_count(const BipartiteGraph& g);

// Vertices incident to at least one edge, sorted. For bipartite graphs the
// parts are reported separately.
std::vector<int> boundary(const LabelledGraph& g);
std::pair<std::vector<int>, std::vector<int>> boundary(const BipartiteGraph& g);

// Max of g over the boundary of x restricted to g's vertex set.
// Throws Error{empty_intersection} when the boundary does not meet it.
int restricted_max_degree(const DegreeSequence& g, const LabelledGraph& x);
// Uses g.part to select the left or right boundary of x.
int restricted_max_degree(const DegreeSequence& g, const BipartiteGraph& x);

// Degree sequence plus required edges X (or H) and forbidden edges L (or L+Y),
// i.e. a description of the graph class the oracle enumerates.
struct ProblemInstance {
  DegreeSequence degrees;
  LabelledGraph required;
  LabelledGraph forbidden;

  // Checks edge-disjointness, degree consistency and matching sizes.
  void validate() const;
};

struct BipartiteInstance {
  DegreeSequence left;   // part S
  DegreeSequence right;  // part T
  BipartiteGraph required;
  BipartiteGraph forbidden;

  void validate() const;
};

// Moves the conditioning graph H into the forbidden set: the class with H
// present and L absent under degrees d has the same containment probabilities
// as the class with nothing required, H+L absent, degrees d - deg(H), target
// X\H. Requires H subset of X and X, L edge-disjoint.
ProblemInstance reduce_conditioning(const DegreeSequence& d, const LabelledGraph& h,
                                    const LabelledGraph& l, const LabelledGraph& x);

}  // namespace degbound
