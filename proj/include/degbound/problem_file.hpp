#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "degbound/graphs.hpp"

namespace degbound {

// Plain-text problem description, one directive per line, '#' comments:
//   degrees: d0 d1 ...                       (generic)
//   left-degrees: ... / right-degrees: ...   (bipartite)
//   require: u v                             (repeatable)
//   forbid: u v                              (repeatable)
struct ParsedProblem {
  bool bipartite = false;
  DegreeSequence degrees;
  DegreeSequence left, right;
  std::vector<Edge> require_edges;
  std::vector<Edge> forbid_edges;

  int vertex_count() const { return bipartite ? left.size() + right.size() : degrees.size(); }
  ProblemInstance generic_instance() const;
  BipartiteInstance bipartite_instance() const;
};

ParsedProblem parse_problem(std::istream& in);
ParsedProblem parse_problem_file(const std::string& path);

}  // namespace degbound
