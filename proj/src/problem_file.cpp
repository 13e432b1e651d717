#include "degbound/problem_file.hpp"

#include <fstream>
#include <sstream>

namespace degbound {

ProblemInstance ParsedProblem::generic_instance() const {
  if (bipartite) fail(ErrorKind::invalid_input, "problem is bipartite");
  const int n = degrees.size();
  return ProblemInstance{degrees, LabelledGraph::from_edges(n, require_edges),
                         LabelledGraph::from_edges(n, forbid_edges)};
}

BipartiteInstance ParsedProblem::bipartite_instance() const {
  if (!bipartite) fail(ErrorKind::invalid_input, "problem is generic");
  return BipartiteInstance{left, right,
                           BipartiteGraph::from_edges(left.size(), right.size(), require_edges),
                           BipartiteGraph::from_edges(left.size(), right.size(), forbid_edges)};
}

namespace {

std::vector<int> parse_int_list(const std::string& body, int line_no) {
  std::istringstream is(body);
  std::vector<int> out;
  int v;
  while (is >> v) {
    if (v < 0) fail(ErrorKind::parse_error, "negative degree on line " + std::to_string(line_no));
    out.push_back(v);
  }
  std::string tail;
  if (is.clear(), is >> tail)
    fail(ErrorKind::parse_error, "trailing junk on line " + std::to_string(line_no));
  return out;
}

Edge parse_edge(const std::string& body, int line_no) {
  std::istringstream is(body);
  int u, v;
  if (!(is >> u >> v)) fail(ErrorKind::parse_error, "expected two vertices on line " + std::to_string(line_no));
  std::string tail;
  if (is >> tail) fail(ErrorKind::parse_error, "trailing junk on line " + std::to_string(line_no));
  if (u < 0 || v < 0) fail(ErrorKind::parse_error, "negative vertex on line " + std::to_string(line_no));
  return Edge{u, v};
}

}  // namespace

ParsedProblem parse_problem(std::istream& in) {
  ParsedProblem out;
  bool saw_generic = false, saw_left = false, saw_right = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      fail(ErrorKind::parse_error, "missing ':' on line " + std::to_string(line_no));
    std::string key = line.substr(first, colon - first);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    const std::string body = line.substr(colon + 1);

    if (key == "degrees") {
      if (saw_generic) fail(ErrorKind::parse_error, "duplicate degrees directive");
      out.degrees = DegreeSequence(parse_int_list(body, line_no));
      saw_generic = true;
    } else if (key == "left-degrees") {
      if (saw_left) fail(ErrorKind::parse_error, "duplicate left-degrees directive");
      out.left = DegreeSequence(parse_int_list(body, line_no), Part::bipartite_left);
      saw_left = true;
    } else if (key == "right-degrees") {
      if (saw_right) fail(ErrorKind::parse_error, "duplicate right-degrees directive");
      out.right = DegreeSequence(parse_int_list(body, line_no), Part::bipartite_right);
      saw_right = true;
    } else if (key == "require") {
      out.require_edges.push_back(parse_edge(body, line_no));
    } else if (key == "forbid") {
      out.forbid_edges.push_back(parse_edge(body, line_no));
    } else {
      fail(ErrorKind::parse_error, "unknown directive '" + key + "' on line " + std::to_string(line_no));
    }
  }
  if (saw_generic && (saw_left || saw_right))
    fail(ErrorKind::parse_error, "mixing generic and bipartite degree directives");
  if (!saw_generic && !(saw_left && saw_right))
    fail(ErrorKind::parse_error, "need either degrees: or both left-degrees: and right-degrees:");
  out.bipartite = !saw_generic;

  // Edge sanity against the declared sizes; graph construction re-validates.
  const int max_u = out.bipartite ? out.left.size() : out.degrees.size();
  const int max_v = out.bipartite ? out.right.size() : out.degrees.size();
  for (const auto* edges : {&out.require_edges, &out.forbid_edges})
    for (const Edge& e : *edges)
      if (e.u >= max_u || e.v >= max_v)
        fail(ErrorKind::parse_error, "edge endpoint out of range for the declared degree sequence");
  return out;
}

ParsedProblem parse_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::parse_error, "cannot open problem file '" + path + "'");
  return parse_problem(in);
}

}  // namespace degbound
