#pragma once

#include <string>

#include "degbound/bounds_types.hpp"
#include "degbound/graphs.hpp"

namespace degbound {

// Parametric degree-sequence families used by the `examples` CLI command:
//   ex1  one vertex of degree n/10, a triangle on three sqrt(n)-degree
//        vertices, log-degree bulk; containment of the triangle
//   ex2  ex1 conditioned on a spanning r-regular circulant being absent
//   ex3  a cycle through sqrt(n) vertices, one of large degree; containment
//   ex4  forbidden triangle touching degrees n/4, sqrt(n), log n
//   ex5  bipartite: one n/2-degree left vertex, sqrt(n) left bulk, log-degree
//        right part sized to balance the sums; containment of a 4-cycle
// Generic families adjust the last entry downward by one when the degree sum
// comes out odd; ex5 adds one remainder vertex on the right when the log
// degree does not divide the left sum.
struct ExampleFamily {
  std::string name;
  bool bipartite = false;
  DiagnosticReport::Mode mode = DiagnosticReport::Mode::contain;

  DegreeSequence degrees;      // generic families
  LabelledGraph target;        // X (contain) or Y (forbid)
  LabelledGraph conditioning;  // L

  DegreeSequence left, right;  // ex5
  BipartiteGraph target_bip, conditioning_bip;

  bool parity_adjusted = false;
  std::string notes;
  double asymptotic_target = 0;  // closed-form comparison value at this n
  std::string target_formula;
};

// Throws Error{invalid_input} for out-of-range n (supported: 100 <= n <= 1e7)
// or an odd r for ex2.
ExampleFamily build_example(const std::string& name, long long n, int r = 2);

long long floor_sqrt(long long n);
long long floor_log_natural(long long n);

}  // namespace degbound
