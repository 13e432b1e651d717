#include "degbound/bipartite_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace degbound {

namespace {

Rational rat(long long v) { return Rational(static_cast<long>(v)); }

void check_inputs(const DegreeSequence& s, const DegreeSequence& t, const BipartiteGraph& h,
                  const BipartiteGraph& l, Edge uv) {
  if (h.m != s.size() || h.n != t.size() || l.m != s.size() || l.n != t.size())
    fail(ErrorKind::invalid_input, "bipartite graph shape does not match the degree sequences");
  if (s.sum() != t.sum()) fail(ErrorKind::invalid_input, "left and right degree sums differ");
  if (uv.u < 0 || uv.u >= s.size() || uv.v < 0 || uv.v >= t.size())
    fail(ErrorKind::invalid_input, "bad bipartite edge");
  if (h.has_edge(uv.u, uv.v) || l.has_edge(uv.u, uv.v))
    fail(ErrorKind::invalid_input, "edge already required or forbidden");
  if (h.intersects(l)) fail(ErrorKind::overlap, "required and forbidden graphs overlap");
}

struct ChainResult {
  std::vector<EdgeTermInfo> terms;
  bool all_p_positive = true;
  bool all_q_positive = true;
  Rational p_product = 1;
  Rational q_product = 1;
  int first_failing_p = -1;
  int first_failing_q = -1;
};

// Same shape as the generic chain walk, with one residual and one
// conditioning multiset per side. The cross-side structure of p and q is
// load-bearing: the T-side sums are evaluated at the S-side vertex's numbers
// and vice versa.
ChainResult evaluate_chain(const DegreeSequence& s, const DegreeSequence& t,
                           const std::vector<Edge>& chain, const std::vector<int>& l0_s,
                           const std::vector<int>& l0_t, bool growing_forbidden) {
  const long long m_g = s.sum();
  ChainResult res;
  res.terms.reserve(chain.size());

  std::vector<int> h_s(s.size(), 0), h_t(t.size(), 0);
  std::vector<int> l_s(l0_s), l_t(l0_t);
  const int grow = growing_forbidden ? static_cast<int>(chain.size()) : 0;
  std::vector<int> cond_s_values(s.size()), cond_t_values(t.size());
  int hint_s = 0, hint_t = 0;
  for (int i = 0; i < s.size(); ++i) {
    cond_s_values[i] = s[i] + l_s[i];
    hint_s = std::max(hint_s, cond_s_values[i] + grow);
  }
  for (int j = 0; j < t.size(); ++j) {
    cond_t_values[j] = t[j] + l_t[j];
    hint_t = std::max(hint_t, cond_t_values[j] + grow);
  }
  TopSumTracker res_s(s.degrees), res_t(t.degrees);
  TopSumTracker cond_s(cond_s_values, hint_s), cond_t(cond_t_values, hint_t);

  long long m_h = 0;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const Edge e = chain[i];
    const Rational denom = rat(m_g - m_h);

    const long long pu = res_t.top_sum(s[e.u] + l_s[e.u]);
    const long long pv = res_s.top_sum(t[e.v] + l_t[e.v]);
    Rational p = 1 - rat(pu + pv) / denom;

    const long long tu = std::max<long long>(s[e.u] - h_s[e.u], 1);
    const long long tv = std::max<long long>(t[e.v] - h_t[e.v], 1);
    const Rational alpha_u = rat(cond_t.top_sum(tu)) / rat(tu);
    const Rational alpha_v = rat(cond_s.top_sum(tv)) / rat(tv);
    Rational q = 1 - (res_s.degree_sum_at(alpha_u) + res_t.degree_sum_at(alpha_v)) / denom;

    EdgeTermInfo info{e, p, q, p > 0, q > 0};
    if (!info.f_positive && res.first_failing_p < 0) res.first_failing_p = static_cast<int>(i);
    if (!info.g_positive && res.first_failing_q < 0) res.first_failing_q = static_cast<int>(i);
    res.all_p_positive = res.all_p_positive && info.f_positive;
    res.all_q_positive = res.all_q_positive && info.g_positive;
    res.p_product *= info.f;
    res.q_product *= info.g;
    res.terms.push_back(std::move(info));

    if (growing_forbidden) {
      cond_s.shift(s[e.u] + l_s[e.u], s[e.u] + l_s[e.u] + 1);
      cond_t.shift(t[e.v] + l_t[e.v], t[e.v] + l_t[e.v] + 1);
      ++l_s[e.u];
      ++l_t[e.v];
    } else {
      res_s.shift(s[e.u] - h_s[e.u], s[e.u] - h_s[e.u] - 1);
      res_t.shift(t[e.v] - h_t[e.v], t[e.v] - h_t[e.v] - 1);
      ++h_s[e.u];
      ++h_t[e.v];
      ++m_h;
    }
  }
  return res;
}

Rational rational_pow(const Rational& q, long long e) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  return make_rational(num, den);
}

}  // namespace

Rational s_function(const DegreeSequence& s, const BipartiteGraph& h, const ExcludedSet& a,
                    const Rational& x) {
  if (h.m != s.size()) fail(ErrorKind::invalid_input, "graph shape does not match the left degrees");
  return degree_sum(subtract(s, degree_sequence_of(h).first), a, x);
}

Rational t_function(const DegreeSequence& t, const BipartiteGraph& h, const ExcludedSet& b,
                    const Rational& x) {
  if (h.n != t.size()) fail(ErrorKind::invalid_input, "graph shape does not match the right degrees");
  return degree_sum(subtract(t, degree_sequence_of(h).second), b, x);
}

Rational p_term(const DegreeSequence& s, const DegreeSequence& t, const BipartiteGraph& h,
                const BipartiteGraph& l, Edge uv) {
  check_inputs(s, t, h, l, uv);
  auto [h_s, h_t] = degree_sequence_of(h);
  auto [l_s, l_t] = degree_sequence_of(l);
  DegreeSequence res_s = subtract(s, h_s), res_t = subtract(t, h_t);
  const long long denom = s.sum() - h.edge_count();
  if (denom == 0) fail(ErrorKind::division_by_zero, "no residual edge mass: m(G) = m(H)");
  Rational num = degree_sum(res_t, rat(s[uv.u] + l_s[uv.u])) +
                 degree_sum(res_s, rat(t[uv.v] + l_t[uv.v]));
  return 1 - num / rat(denom);
}

Rational q_term(const DegreeSequence& s, const DegreeSequence& t, const BipartiteGraph& h,
                const BipartiteGraph& l, Edge uv) {
  check_inputs(s, t, h, l, uv);
  auto [h_s, h_t] = degree_sequence_of(h);
  auto [l_s, l_t] = degree_sequence_of(l);
  DegreeSequence res_s = subtract(s, h_s), res_t = subtract(t, h_t);
  const long long denom = s.sum() - h.edge_count();
  if (denom == 0) fail(ErrorKind::division_by_zero, "no residual edge mass: m(G) = m(H)");
  Rational alpha_u = alpha_value(t, l_t, s, h_s, uv.u);
  Rational alpha_v = alpha_value(s, l_s, t, h_t, uv.v);
  Rational num = degree_sum(res_s, ExcludedSet{}, alpha_u) + degree_sum(res_t, ExcludedSet{}, alpha_v);
  return 1 - num / rat(denom);
}

ProbabilityBound single_edge_bounds_bipartite(const DegreeSequence& s, const DegreeSequence& t,
                                              const BipartiteGraph& h, const BipartiteGraph& l,
                                              Edge uv) {
  check_inputs(s, t, h, l, uv);
  auto [h_s, h_t] = degree_sequence_of(h);
  const long long ru = s[uv.u] - h_s[uv.u];
  const long long rv = t[uv.v] - h_t[uv.v];
  if (ru < 0 || rv < 0) fail(ErrorKind::negative_degree, "required edges exceed the degrees");

  ProbabilityBound out;
  out.theorem = "single-edge-bipartite";
  if (ru == 0 || rv == 0) {
    out.exact_zero = true;
    out.lower = out.upper_raw = out.upper_clamped = Rational(0);
    out.theorem = "single-edge-bipartite/exact-zero";
    return out;
  }

  Rational p = p_term(s, t, h, l, uv);
  Rational q = q_term(s, t, h, l, uv);
  out.terms.push_back(EdgeTermInfo{uv, p, q, p > 0, q > 0});
  const Rational ratio = rat(s.sum() - h.edge_count()) / rat(ru * rv);
  if (p > 0) {
    out.upper_raw = 1 / (1 + ratio * p);
    out.upper_clamped = out.upper_raw;
    out.order_for_upper = {0};
  } else {
    out.first_failing_f = 0;
  }
  if (q > 0) {
    out.lower = 1 / (1 + ratio / q);
    out.order_for_lower = {0};
  } else {
    out.first_failing_g = 0;
  }
  return out;
}

Rational pi_factor_bipartite(const DegreeSequence& s, const DegreeSequence& t, const BipartiteGraph& x) {
  const long long m_g = s.sum();
  const long long m_x = x.edge_count();
  auto [x_s, x_t] = degree_sequence_of(x);
  BigInt num = 1;
  auto [bs, bt] = boundary(x);
  for (int i : bs) num *= falling_factorial(s[i], x_s[i]);
  for (int j : bt) num *= falling_factorial(t[j], x_t[j]);
  BigInt den = falling_factorial(m_g, m_x);
  if (den == 0) fail(ErrorKind::division_by_zero, "more target edges than the class admits");
  return make_rational(num, den);
}

Rational phi_correction_bipartite(const DegreeSequence& s, const DegreeSequence& t,
                                  const BipartiteGraph& x) {
  const long long m_x = x.edge_count();
  if (m_x == 0) fail(ErrorKind::division_by_zero, "phi needs a non-empty target");
  const long long denom = s.sum() - m_x;
  if (denom == 0) fail(ErrorKind::division_by_zero, "phi undefined when m(G) = m(X)");
  long long weight = 0;
  for (const Edge& e : x.edges) weight += static_cast<long long>(s[e.u]) * t[e.v];
  return 1 + make_rational(weight, m_x) / rat(denom);
}

Rational phi_factor_bipartite(const DegreeSequence& s, const DegreeSequence& t, const BipartiteGraph& y) {
  const long long m_g = s.sum();
  if (m_g == 0) fail(ErrorKind::division_by_zero, "empty graph class has no edge mass");
  Rational phi = 1;
  for (const Edge& e : y.edges)
    phi *= 1 / (1 + rat(static_cast<long long>(s[e.u]) * t[e.v]) / rat(m_g));
  return phi;
}

ProbabilityBound subgraph_bounds_bipartite(const DegreeSequence& s, const DegreeSequence& t,
                                           const BipartiteGraph& x, const BipartiteGraph& l,
                                           const EdgeOrder& order) {
  if (x.m != s.size() || x.n != t.size() || l.m != s.size() || l.n != t.size())
    fail(ErrorKind::invalid_input, "bipartite graph shape does not match the degree sequences");
  if (s.sum() != t.sum()) fail(ErrorKind::invalid_input, "left and right degree sums differ");
  if (x.intersects(l)) fail(ErrorKind::overlap, "target and forbidden edges overlap");

  ProbabilityBound out;
  out.theorem = "multiple-edges-bipartite";
  const long long m_x = x.edge_count();
  if (m_x == 0) {
    out.lower = out.upper_raw = out.upper_clamped = Rational(1);
    return out;
  }

  auto [x_s, x_t] = degree_sequence_of(x);
  for (int i = 0; i < s.size(); ++i)
    if (x_s[i] > s[i]) out.exact_zero = true;
  for (int j = 0; j < t.size(); ++j)
    if (x_t[j] > t[j]) out.exact_zero = true;
  if (out.exact_zero) {
    out.lower = out.upper_raw = out.upper_clamped = Rational(0);
    out.theorem = "multiple-edges-bipartite/exact-zero";
    return out;
  }

  const Rational pi = pi_factor_bipartite(s, t, x);
  const bool phi_defined = s.sum() - m_x > 0;
  Rational phi_pow = 1;
  if (phi_defined) phi_pow = rational_pow(phi_correction_bipartite(s, t, x), m_x);

  auto [l_s, l_t] = degree_sequence_of(l);
  bool have_upper = false, have_lower = false;
  for (const std::vector<int>& perm : expand_edge_orders(static_cast<int>(m_x), order)) {
    std::vector<Edge> chain(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) chain[i] = x.edges[perm[i]];
    ChainResult chain_res = evaluate_chain(s, t, chain, l_s.degrees, l_t.degrees, false);
    if (chain_res.all_p_positive) {
      Rational upper = pi / chain_res.p_product;
      if (!have_upper || upper < *out.upper_raw) {
        out.upper_raw = upper;
        out.upper_clamped = std::min(upper, Rational(1));
        out.order_for_upper = perm;
        have_upper = true;
      }
    }
    if (chain_res.all_q_positive && phi_defined) {
      Rational lower = pi * chain_res.q_product / phi_pow;
      if (!have_lower || lower > *out.lower) {
        out.lower = lower;
        out.order_for_lower = perm;
        have_lower = true;
      }
    }
    if (out.terms.empty()) {
      out.terms = chain_res.terms;
      out.first_failing_f = chain_res.first_failing_p;
      out.first_failing_g = chain_res.first_failing_q;
    }
  }
  return out;
}

ProbabilityBound forbidden_bounds_bipartite(const DegreeSequence& s, const DegreeSequence& t,
                                            const BipartiteGraph& l0, const BipartiteGraph& y,
                                            const EdgeOrder& order) {
  if (y.m != s.size() || y.n != t.size() || l0.m != s.size() || l0.n != t.size())
    fail(ErrorKind::invalid_input, "bipartite graph shape does not match the degree sequences");
  if (s.sum() != t.sum()) fail(ErrorKind::invalid_input, "left and right degree sums differ");
  if (l0.intersects(y)) fail(ErrorKind::overlap, "target and conditioning edges overlap");

  ProbabilityBound out;
  out.theorem = "forbidden-edges-bipartite";
  const long long m_y = y.edge_count();
  if (m_y == 0) {
    out.lower = out.upper_raw = out.upper_clamped = Rational(1);
    return out;
  }
  if (s.sum() == 0) {
    out.lower = out.upper_raw = out.upper_clamped = Rational(1);
    out.theorem = "forbidden-edges-bipartite/degenerate";
    return out;
  }

  const Rational phi = phi_factor_bipartite(s, t, y);
  auto [l_s, l_t] = degree_sequence_of(l0);
  bool have_upper = false, have_lower = false;
  for (const std::vector<int>& perm : expand_edge_orders(static_cast<int>(m_y), order)) {
    std::vector<Edge> chain(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) chain[i] = y.edges[perm[i]];
    ChainResult chain_res = evaluate_chain(s, t, chain, l_s.degrees, l_t.degrees, true);
    if (chain_res.all_q_positive) {
      Rational upper = phi / chain_res.q_product;
      if (!have_upper || upper < *out.upper_raw) {
        out.upper_raw = upper;
        out.upper_clamped = std::min(upper, Rational(1));
        out.order_for_upper = perm;
        have_upper = true;
      }
    }
    if (chain_res.all_p_positive) {
      Rational lower = phi * chain_res.p_product;
      if (!have_lower || lower > *out.lower) {
        out.lower = lower;
        out.order_for_lower = perm;
        have_lower = true;
      }
    }
    if (out.terms.empty()) {
      out.terms = chain_res.terms;
      out.first_failing_f = chain_res.first_failing_p;
      out.first_failing_g = chain_res.first_failing_q;
    }
  }
  return out;
}

DiagnosticReport corollary_diagnostics_bipartite(const DegreeSequence& s, const DegreeSequence& t,
                                                 const BipartiteGraph& x_or_y, const BipartiteGraph& l,
                                                 DiagnosticReport::Mode mode) {
  if (x_or_y.m != s.size() || x_or_y.n != t.size() || l.m != s.size() || l.n != t.size())
    fail(ErrorKind::invalid_input, "bipartite graph shape does not match the degree sequences");
  if (s.sum() != t.sum()) fail(ErrorKind::invalid_input, "left and right degree sums differ");
  DiagnosticReport rep;
  rep.mode = mode;
  rep.bipartite = true;
  const long long m_g = s.sum();
  const long long m_t = x_or_y.edge_count();
  auto [t_s, t_t] = degree_sequence_of(x_or_y);  // (x, y) or (y, z)
  auto [l_s, l_t] = degree_sequence_of(l);
  auto [bs, bt] = boundary(x_or_y);

  if (mode == DiagnosticReport::Mode::contain) {
    rep.pi_or_phi = pi_factor_bipartite(s, t, x_or_y);
    if (m_t == 0) rep.big_lambda = Rational(0);
    if (m_t > 0 && m_g - m_t > 0) {
      const int delta_tm = restricted_max_degree(add(t, l_t), x_or_y);
      const int delta_sl = restricted_max_degree(add(s, l_s), x_or_y);
      rep.rho = (degree_sum(s, rat(delta_tm)) + degree_sum(t, rat(delta_sl))) / rat(m_g - m_t);
      const long long dxs = restricted_max_degree(s, x_or_y);
      const long long dxt = restricted_max_degree(t, x_or_y);
      rep.big_lambda = rat(m_t) * rat(dxs * dxt) / rat(m_g - m_t);
    }
    if (m_t > 0) {
      Rational kappa_s = 0, kappa_t = 0, mu_s = 0, mu_t = 0;
      for (int i : bs) {
        kappa_s += rat(t_s[i]) * rat(s[i] + l_s[i]);
        mu_s += rat(t_s[i]) * alpha_value(t, l_t, s, t_s, i);
      }
      for (int j : bt) {
        kappa_t += rat(t_t[j]) * rat(t[j] + l_t[j]);
        mu_t += rat(t_t[j]) * alpha_value(s, l_s, t, t_t, j);
      }
      rep.kappa_s = kappa_s / rat(m_t);
      rep.kappa_t = kappa_t / rat(m_t);
      rep.mu_s = mu_s / rat(m_t);
      rep.mu_t = mu_t / rat(m_t);
    }
  } else {
    rep.pi_or_phi = m_g > 0 ? phi_factor_bipartite(s, t, x_or_y) : Rational(1);
    DegreeSequence mz = add(l_t, t_t);  // m + z on the T side
    DegreeSequence ly = add(l_s, t_s);  // l + y on the S side
    if (m_t > 0 && m_g > 0) {
      Rational gamma_s_side = gamma_value(t, mz, s, zeros(s.size(), Part::bipartite_left));
      Rational gamma_t_side = gamma_value(s, ly, t, zeros(t.size(), Part::bipartite_right));
      rep.rho = (degree_sum(s, ExcludedSet{}, gamma_s_side) +
                 degree_sum(t, ExcludedSet{}, gamma_t_side)) /
                rat(m_g);
    }
    if (m_t > 0) {
      Rational lambda_s = 0, lambda_t = 0, eta_s = 0, eta_t = 0;
      for (int i : bs) {
        lambda_s += rat(t_s[i]) * alpha_value(t, mz, s, zeros(s.size(), Part::bipartite_left), i);
        eta_s += rat(t_s[i]) * rat(s[i] + l_s[i] + t_s[i]);
      }
      for (int j : bt) {
        lambda_t += rat(t_t[j]) * alpha_value(s, ly, t, zeros(t.size(), Part::bipartite_right), j);
        eta_t += rat(t_t[j]) * rat(t[j] + l_t[j] + t_t[j]);
      }
      rep.lambda_s = lambda_s / rat(m_t);
      rep.lambda_t = lambda_t / rat(m_t);
      rep.eta_s = eta_s / rat(m_t);
      rep.eta_t = eta_t / rat(m_t);
    }
  }
  if (rep.rho) {
    rep.rho_below_one = *rep.rho < 1;
    const double r = rep.rho->get_d();
    if (r == 0.0)
      rep.c_of_k = -1.0;
    else if (r > 0.0 && r < 1.0)
      rep.c_of_k = std::log1p(-r) / r;
  }
  return rep;
}

}  // namespace degbound
