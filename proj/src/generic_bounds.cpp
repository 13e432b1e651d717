#include "degbound/generic_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace degbound {

namespace {

Rational rat(long long v) { return Rational(static_cast<long>(v)); }

void check_inputs(const DegreeSequence& d, const LabelledGraph& h, const LabelledGraph& l, Edge uv) {
  if (h.n != d.size() || l.n != d.size())
    fail(ErrorKind::invalid_input, "graph vertex count does not match the degree sequence");
  if (uv.u == uv.v || uv.u < 0 || uv.v < 0 || uv.u >= d.size() || uv.v >= d.size())
    fail(ErrorKind::invalid_input, "bad edge");
  if (h.has_edge(uv.u, uv.v) || l.has_edge(uv.u, uv.v))
    fail(ErrorKind::invalid_input, "edge already required or forbidden");
  if (h.intersects(l)) fail(ErrorKind::overlap, "required and forbidden graphs overlap");
}

struct ChainResult {
  std::vector<EdgeTermInfo> terms;
  bool all_f_positive = true;
  bool all_g_positive = true;
  Rational f_product = 1;
  Rational g_product = 1;
  int first_failing_f = -1;
  int first_failing_g = -1;
};

// Walks the edges once, maintaining the residual multiset (degrees of d - h)
// and the conditioning multiset (degrees of d + l). In containment chains h
// grows and l stays fixed; in avoidance chains h stays empty and l grows.
ChainResult evaluate_chain(const DegreeSequence& d, const std::vector<Edge>& chain,
                           const std::vector<int>& l0_deg, bool growing_forbidden) {
  const int n = d.size();
  const long long two_m = d.sum();
  ChainResult res;
  res.terms.reserve(chain.size());

  std::vector<int> h_deg(n, 0), l_deg(l0_deg);
  int cond_hint = 0;
  std::vector<int> cond_values(n);
  for (int i = 0; i < n; ++i) {
    cond_values[i] = d[i] + l_deg[i];
    cond_hint = std::max(cond_hint, cond_values[i] + (growing_forbidden ? static_cast<int>(chain.size()) : 0));
  }
  TopSumTracker residual(d.degrees);
  TopSumTracker conditioning(cond_values, cond_hint);

  long long m_h = 0;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const Edge e = chain[i];
    const long long denom = two_m - 2 * m_h;
    const Rational denom_q = rat(denom);

    const long long fu = residual.top_sum(d[e.u] + l_deg[e.u]);
    const long long fv = residual.top_sum(d[e.v] + l_deg[e.v]);
    Rational f = 1 - rat(fu + fv) / denom_q;

    const long long tu = std::max<long long>(d[e.u] - h_deg[e.u], 1);
    const long long tv = std::max<long long>(d[e.v] - h_deg[e.v], 1);
    const Rational alpha_u = rat(conditioning.top_sum(tu)) / rat(tu);
    const Rational alpha_v = rat(conditioning.top_sum(tv)) / rat(tv);
    Rational g = 1 - (residual.degree_sum_at(alpha_u + 2) + residual.degree_sum_at(alpha_v + 2)) / denom_q;

    EdgeTermInfo info{e, f, g, f > 0, g > 0};
    if (!info.f_positive && res.first_failing_f < 0) res.first_failing_f = static_cast<int>(i);
    if (!info.g_positive && res.first_failing_g < 0) res.first_failing_g = static_cast<int>(i);
    res.all_f_positive = res.all_f_positive && info.f_positive;
    res.all_g_positive = res.all_g_positive && info.g_positive;
    res.f_product *= info.f;
    res.g_product *= info.g;
    res.terms.push_back(std::move(info));

    if (growing_forbidden) {
      conditioning.shift(d[e.u] + l_deg[e.u], d[e.u] + l_deg[e.u] + 1);
      conditioning.shift(d[e.v] + l_deg[e.v], d[e.v] + l_deg[e.v] + 1);
      ++l_deg[e.u];
      ++l_deg[e.v];
    } else {
      residual.shift(d[e.u] - h_deg[e.u], d[e.u] - h_deg[e.u] - 1);
      residual.shift(d[e.v] - h_deg[e.v], d[e.v] - h_deg[e.v] - 1);
      ++h_deg[e.u];
      ++h_deg[e.v];
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

void require_even_sum(const DegreeSequence& d) {
  if (d.sum() % 2 != 0) fail(ErrorKind::invalid_input, "generic degree sum must be even");
}

}  // namespace

Rational f_term(const DegreeSequence& d, const LabelledGraph& h, const LabelledGraph& l, Edge uv) {
  check_inputs(d, h, l, uv);
  DegreeSequence residual = subtract(d, degree_sequence_of(h));
  DegreeSequence ldeg = degree_sequence_of(l);
  const long long denom = d.sum() - 2 * h.edge_count();
  if (denom == 0) fail(ErrorKind::division_by_zero, "no residual edge mass: m(G) = m(H)");
  Rational num = degree_sum(residual, rat(d[uv.u] + ldeg[uv.u])) +
                 degree_sum(residual, rat(d[uv.v] + ldeg[uv.v]));
  return 1 - num / rat(denom);
}

Rational g_term(const DegreeSequence& d, const LabelledGraph& h, const LabelledGraph& l, Edge uv) {
  check_inputs(d, h, l, uv);
  DegreeSequence hdeg = degree_sequence_of(h);
  DegreeSequence residual = subtract(d, hdeg);
  DegreeSequence ldeg = degree_sequence_of(l);
  const long long denom = d.sum() - 2 * h.edge_count();
  if (denom == 0) fail(ErrorKind::division_by_zero, "no residual edge mass: m(G) = m(H)");
  Rational alpha_u = alpha_value(d, ldeg, d, hdeg, uv.u);
  Rational alpha_v = alpha_value(d, ldeg, d, hdeg, uv.v);
  Rational num = degree_sum(residual, ExcludedSet{}, alpha_u + 2) +
                 degree_sum(residual, ExcludedSet{}, alpha_v + 2);
  return 1 - num / rat(denom);
}

ProbabilityBound single_edge_bounds(const DegreeSequence& d, const LabelledGraph& h,
                                    const LabelledGraph& l, Edge uv) {
  check_inputs(d, h, l, uv);
  require_even_sum(d);
  DegreeSequence hdeg = degree_sequence_of(h);
  const long long ru = d[uv.u] - hdeg[uv.u];
  const long long rv = d[uv.v] - hdeg[uv.v];
  if (ru < 0 || rv < 0) fail(ErrorKind::negative_degree, "required edges exceed the degrees");

  ProbabilityBound out;
  out.theorem = "single-edge";
  if (ru == 0 || rv == 0) {
    // The bound expressions divide by the residual degrees, but the edge can
    // never be present: report the probability exactly instead.
    out.exact_zero = true;
    out.lower = out.upper_raw = out.upper_clamped = Rational(0);
    out.theorem = "single-edge/exact-zero";
    return out;
  }

  Rational f = f_term(d, h, l, uv);
  Rational g = g_term(d, h, l, uv);
  out.terms.push_back(EdgeTermInfo{uv, f, g, f > 0, g > 0});
  const Rational ratio = rat(d.sum() - 2 * h.edge_count()) / rat(ru * rv);
  if (f > 0) {
    out.upper_raw = 1 / (1 + ratio * f);
    out.upper_clamped = out.upper_raw;
    out.order_for_upper = {0};
  } else {
    out.first_failing_f = 0;
  }
  if (g > 0) {
    out.lower = 1 / (1 + ratio / g);
    out.order_for_lower = {0};
  } else {
    out.first_failing_g = 0;
  }
  return out;
}

Rational pi_factor(const DegreeSequence& d, const LabelledGraph& x) {
  require_even_sum(d);
  const long long m_g = d.sum() / 2;
  const long long m_x = x.edge_count();
  DegreeSequence xdeg = degree_sequence_of(x);
  BigInt num = 1;
  for (int j : boundary(x)) num *= falling_factorial(d[j], xdeg[j]);
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(m_x));
  den *= falling_factorial(m_g, m_x);
  if (den == 0) fail(ErrorKind::division_by_zero, "more target edges than the class admits");
  return make_rational(num, den);
}

Rational phi_correction(const DegreeSequence& d, const LabelledGraph& x) {
  const long long m_x = x.edge_count();
  if (m_x == 0) fail(ErrorKind::division_by_zero, "phi needs a non-empty target");
  const long long denom = d.sum() - 2 * m_x;
  if (denom == 0) fail(ErrorKind::division_by_zero, "phi undefined when m(G) = m(X)");
  long long weight = 0;
  for (const Edge& e : x.edges) weight += static_cast<long long>(d[e.u]) * d[e.v];
  return 1 + make_rational(weight, m_x) / rat(denom);
}

Rational phi_factor(const DegreeSequence& d, const LabelledGraph& y) {
  const long long two_m = d.sum();
  if (two_m == 0) fail(ErrorKind::division_by_zero, "empty graph class has no edge mass");
  Rational phi = 1;
  for (const Edge& e : y.edges)
    phi *= 1 / (1 + rat(static_cast<long long>(d[e.u]) * d[e.v]) / rat(two_m));
  return phi;
}

ProbabilityBound subgraph_bounds(const DegreeSequence& d, const LabelledGraph& x,
                                 const LabelledGraph& l, const EdgeOrder& order) {
  if (x.n != d.size() || l.n != d.size())
    fail(ErrorKind::invalid_input, "graph vertex count does not match the degree sequence");
  if (x.intersects(l)) fail(ErrorKind::overlap, "target and forbidden edges overlap");
  require_even_sum(d);

  ProbabilityBound out;
  out.theorem = "multiple-edges";
  const long long m_x = x.edge_count();
  if (m_x == 0) {
    out.lower = out.upper_raw = out.upper_clamped = Rational(1);
    return out;
  }

  DegreeSequence xdeg = degree_sequence_of(x);
  for (int i = 0; i < d.size(); ++i) {
    if (xdeg[i] > d[i]) {
      out.exact_zero = true;
      out.lower = out.upper_raw = out.upper_clamped = Rational(0);
      out.theorem = "multiple-edges/exact-zero";
      return out;
    }
  }

  const Rational pi = pi_factor(d, x);
  const bool phi_defined = d.sum() - 2 * m_x > 0;
  Rational phi_pow = 1;
  if (phi_defined) phi_pow = rational_pow(phi_correction(d, x), m_x);

  std::vector<int> ldeg0(degree_sequence_of(l).degrees);
  bool have_upper = false, have_lower = false;
  for (const std::vector<int>& perm : expand_edge_orders(static_cast<int>(m_x), order)) {
    std::vector<Edge> chain(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) chain[i] = x.edges[perm[i]];
    ChainResult chain_res = evaluate_chain(d, chain, ldeg0, /*growing_forbidden=*/false);
    if (chain_res.all_f_positive) {
      Rational upper = pi / chain_res.f_product;
      if (!have_upper || upper < *out.upper_raw) {
        out.upper_raw = upper;
        out.upper_clamped = std::min(upper, Rational(1));
        out.order_for_upper = perm;
        have_upper = true;
      }
    }
    if (chain_res.all_g_positive && phi_defined) {
      Rational lower = pi * chain_res.g_product / phi_pow;
      if (!have_lower || lower > *out.lower) {
        out.lower = lower;
        out.order_for_lower = perm;
        have_lower = true;
      }
    }
    if (out.terms.empty()) {
      out.terms = chain_res.terms;
      out.first_failing_f = chain_res.first_failing_f;
      out.first_failing_g = chain_res.first_failing_g;
    }
  }
  return out;
}

ProbabilityBound forbidden_bounds(const DegreeSequence& d, const LabelledGraph& l0,
                                  const LabelledGraph& y, const EdgeOrder& order) {
  if (y.n != d.size() || l0.n != d.size())
    fail(ErrorKind::invalid_input, "graph vertex count does not match the degree sequence");
  if (l0.intersects(y)) fail(ErrorKind::overlap, "target and conditioning edges overlap");
  require_even_sum(d);

  ProbabilityBound out;
  out.theorem = "forbidden-edges";
  const long long m_y = y.edge_count();
  if (m_y == 0) {
    out.lower = out.upper_raw = out.upper_clamped = Rational(1);
    return out;
  }
  if (d.sum() == 0) {
    // The class holds exactly the empty graph, which avoids every edge.
    out.lower = out.upper_raw = out.upper_clamped = Rational(1);
    out.theorem = "forbidden-edges/degenerate";
    return out;
  }

  const Rational phi = phi_factor(d, y);
  std::vector<int> ldeg0(degree_sequence_of(l0).degrees);
  bool have_upper = false, have_lower = false;
  for (const std::vector<int>& perm : expand_edge_orders(static_cast<int>(m_y), order)) {
    std::vector<Edge> chain(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) chain[i] = y.edges[perm[i]];
    ChainResult chain_res = evaluate_chain(d, chain, ldeg0, /*growing_forbidden=*/true);
    if (chain_res.all_g_positive) {
      Rational upper = phi / chain_res.g_product;
      if (!have_upper || upper < *out.upper_raw) {
        out.upper_raw = upper;
        out.upper_clamped = std::min(upper, Rational(1));
        out.order_for_upper = perm;
        have_upper = true;
      }
    }
    if (chain_res.all_f_positive) {
      Rational lower = phi * chain_res.f_product;
      if (!have_lower || lower > *out.lower) {
        out.lower = lower;
        out.order_for_lower = perm;
        have_lower = true;
      }
    }
    if (out.terms.empty()) {
      out.terms = chain_res.terms;
      out.first_failing_f = chain_res.first_failing_f;
      out.first_failing_g = chain_res.first_failing_g;
    }
  }
  return out;
}

DiagnosticReport corollary_diagnostics(const DegreeSequence& d, const LabelledGraph& x_or_y,
                                       const LabelledGraph& l, DiagnosticReport::Mode mode) {
  if (x_or_y.n != d.size() || l.n != d.size())
    fail(ErrorKind::invalid_input, "graph vertex count does not match the degree sequence");
  require_even_sum(d);
  DiagnosticReport rep;
  rep.mode = mode;
  const long long m_g = d.sum() / 2;
  const long long m_t = x_or_y.edge_count();
  DegreeSequence tdeg = degree_sequence_of(x_or_y);
  DegreeSequence ldeg = degree_sequence_of(l);

  if (mode == DiagnosticReport::Mode::contain) {
    rep.pi_or_phi = pi_factor(d, x_or_y);
    if (m_t == 0) rep.big_lambda = Rational(0);
    if (m_t > 0 && m_g - m_t > 0) {
      const int delta_dx = restricted_max_degree(add(d, ldeg), x_or_y);
      rep.rho = degree_sum(d, rat(delta_dx)) / rat(m_g - m_t);
      const long long delta_x = restricted_max_degree(d, x_or_y);
      rep.big_lambda = rat(m_t) * rat(delta_x * delta_x) / rat(m_g - m_t);
    }
    if (m_t > 0) {
      Rational kappa = 0, mu = 0;
      for (int j : boundary(x_or_y)) {
        kappa += rat(tdeg[j]) * rat(d[j] + ldeg[j]);
        mu += rat(tdeg[j]) * alpha_value(d, ldeg, d, tdeg, j);
      }
      rep.kappa = kappa / rat(2 * m_t);
      rep.mu = mu / rat(2 * m_t);
    }
  } else {
    rep.pi_or_phi = d.sum() > 0 ? phi_factor(d, x_or_y) : Rational(1);
    if (m_t > 0 && m_g > 0) {
      Rational gamma = gamma_value(d, add(ldeg, tdeg), d, zeros(d.size()));
      rep.rho = degree_sum(d, ExcludedSet{}, gamma + 2) / rat(m_g);
    }
    if (m_t > 0) {
      DegreeSequence ly = add(ldeg, tdeg);
      Rational lambda = 0, eta = 0;
      for (int j : boundary(x_or_y)) {
        lambda += rat(tdeg[j]) * alpha_value(d, ly, d, zeros(d.size()), j);
        eta += rat(tdeg[j]) * rat(d[j] + ldeg[j] + tdeg[j]);
      }
      rep.lambda = lambda / rat(2 * m_t);
      rep.eta = eta / rat(2 * m_t);
    }
  }
  if (rep.rho) {
    rep.rho_below_one = *rep.rho < 1;
    const double r = rep.rho->get_d();
    if (r == 0.0)
      rep.c_of_k = -1.0;  // limit of ln(1-r)/r as r -> 0
    else if (r > 0.0 && r < 1.0)
      rep.c_of_k = std::log1p(-r) / r;
  }
  return rep;
}

}  // namespace degbound
