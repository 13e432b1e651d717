#pragma once

#include "degbound/bounds_types.hpp"
#include "degbound/degree_sums.hpp"
#include "degbound/graphs.hpp"

namespace degbound {

// Error term activating the upper bounds:
//   f(d, H, L, uv) = 1 - [D_H(d_u + l_u) + D_H(d_v + l_v)] / (2m(G) - 2m(H))
// where D_H is the degree sum of d - deg(H). May be <= 0 (then inapplicable).
// Throws Error{division_by_zero} when m(G) = m(H).
Rational f_term(const DegreeSequence& d, const LabelledGraph& h, const LabelledGraph& l, Edge uv);

// Error term activating the lower bounds; evaluates D_H at the rational
// points alpha_u + 2 and alpha_v + 2 without rounding.
Rational g_term(const DegreeSequence& d, const LabelledGraph& h, const LabelledGraph& l, Edge uv);

// Bounds on P(uv in G) for G uniform on the class with H present and L
// absent. Returns an exact_zero outcome when a residual endpoint degree is 0
// (the bound expressions are undefined but the probability is identically 0).
ProbabilityBound single_edge_bounds(const DegreeSequence& d, const LabelledGraph& h,
                                    const LabelledGraph& l, Edge uv);

// Leading factor Pi(X) = prod_j [d_j]_{x_j} / (2^{m(X)} [m(G)]_{m(X)}).
Rational pi_factor(const DegreeSequence& d, const LabelledGraph& x);

// Correction factor phi = 1 + (avg of d_u d_v over X) / (2m(G) - 2m(X)).
// Throws Error{division_by_zero} when m(G) = m(X).
Rational phi_correction(const DegreeSequence& d, const LabelledGraph& x);

// Leading factor Phi(Y) = prod_j (1 + d_p d_q / 2m(G))^{-1}.
Rational phi_factor(const DegreeSequence& d, const LabelledGraph& y);

// Bounds on P(X subset of G) for G uniform on the class avoiding L:
//   upper = Pi(X) * prod 1/f(d, X_{i-1}, L, e_i)       (all f > 0)
//   lower = Pi(X) * prod g(d, X_{i-1}, L, e_i) / phi   (all g > 0)
ProbabilityBound subgraph_bounds(const DegreeSequence& d, const LabelledGraph& x,
                                 const LabelledGraph& l, const EdgeOrder& order = {});

// Bounds on P(Y disjoint from G) for G uniform on the class avoiding l0:
//   upper = Phi(Y) * prod 1/g(d, 0, L_{j-1}, e_j)      (all g > 0)
//   lower = Phi(Y) * prod f(d, 0, L_{j-1}, e_j)        (all f > 0)
ProbabilityBound forbidden_bounds(const DegreeSequence& d, const LabelledGraph& l0,
                                  const LabelledGraph& y, const EdgeOrder& order = {});

// Finite-n corollary quantities (rho, kappa, mu, lambda, eta, Lambda, C) for
// the instance; mode selects the containment or avoidance family.
DiagnosticReport corollary_diagnostics(const DegreeSequence& d, const LabelledGraph& x_or_y,
                                       const LabelledGraph& l, DiagnosticReport::Mode mode);

}  // namespace degbound
