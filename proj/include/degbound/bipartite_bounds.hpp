#pragma once

#include "degbound/bounds_types.hpp"
#include "degbound/degree_sums.hpp"
#include "degbound/graphs.hpp"

namespace degbound {

// One-sided degree sums S_H^A(x) = D^A(s - h, x) and T_H^B(x) = D^B(t - i, x),
// where (h, i) is the degree sequence of H. Thin wrappers over degree_sum on
// the residual sequence; they inherit its monotonicity and concavity.
Rational s_function(const DegreeSequence& s, const BipartiteGraph& h, const ExcludedSet& a,
                    const Rational& x);
Rational t_function(const DegreeSequence& t, const BipartiteGraph& h, const ExcludedSet& b,
                    const Rational& x);

// Bipartite analogues of the generic error terms. With (l, m) the degree
// sequence of L and (h, i) the degree sequence of H:
//   p = 1 - [T_H(s_u + l_u) + S_H(t_v + m_v)] / (m(G) - m(H))
//   q = 1 - [S_H(alpha_u(t, m, s, h)) + T_H(alpha_v(s, l, t, i))] / (m(G) - m(H))
// where S_H, T_H are the degree sums of s - h and t - i. Note q carries no
// "+2" offset, unlike the generic g, and each alpha mixes the two sides.
Rational p_term(const DegreeSequence& s, const DegreeSequence& t, const BipartiteGraph& h,
                const BipartiteGraph& l, Edge uv);
Rational q_term(const DegreeSequence& s, const DegreeSequence& t, const BipartiteGraph& h,
                const BipartiteGraph& l, Edge uv);

ProbabilityBound single_edge_bounds_bipartite(const DegreeSequence& s, const DegreeSequence& t,
                                              const BipartiteGraph& h, const BipartiteGraph& l,
                                              Edge uv);

// Pi'(X) = prod_S [s_i]_{x_i} prod_T [t_j]_{y_j} / [m(G)]_{m(X)}.
Rational pi_factor_bipartite(const DegreeSequence& s, const DegreeSequence& t, const BipartiteGraph& x);
// phi' = 1 + (avg of s_u t_v over X) / (m(G) - m(X)).
Rational phi_correction_bipartite(const DegreeSequence& s, const DegreeSequence& t, const BipartiteGraph& x);
// Phi'(Y) = prod_j (1 + s_p t_q / m(G))^{-1}.
Rational phi_factor_bipartite(const DegreeSequence& s, const DegreeSequence& t, const BipartiteGraph& y);

ProbabilityBound subgraph_bounds_bipartite(const DegreeSequence& s, const DegreeSequence& t,
                                           const BipartiteGraph& x, const BipartiteGraph& l,
                                           const EdgeOrder& order = {});

ProbabilityBound forbidden_bounds_bipartite(const DegreeSequence& s, const DegreeSequence& t,
                                            const BipartiteGraph& l0, const BipartiteGraph& y,
                                            const EdgeOrder& order = {});

DiagnosticReport corollary_diagnostics_bipartite(const DegreeSequence& s, const DegreeSequence& t,
                                                 const BipartiteGraph& x_or_y, const BipartiteGraph& l,
                                                 DiagnosticReport::Mode mode);

}  // namespace degbound
