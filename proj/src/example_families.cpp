#include "degbound/example_families.hpp"

#include <cmath>

namespace degbound {

long long floor_sqrt(long long n) {
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

long long floor_log_natural(long long n) {
  // ln n is never an integer for n >= 2, and for n <= 1e18 it stays far
  // enough from one that extended precision floors it correctly.
  long double l = std::log(static_cast<long double>(n));
  return static_cast<long long>(std::floor(l));
}

namespace {

constexpr long long kMinN = 100;
constexpr long long kMaxN = 10'000'000;

void check_n(long long n) {
  if (n < kMinN || n > kMaxN) fail(ErrorKind::invalid_input, "example size n must be in [100, 1e7]");
}

// Realizable generic sequences need an even degree sum; the families ignore
// parity, so tweak the last bulk entry down by one when needed.
bool fix_parity(std::vector<int>& degs) {
  long long sum = 0;
  for (int d : degs) sum += d;
  if (sum % 2 == 0) return false;
  degs.back() -= 1;
  return true;
}

double ln(double x) { return std::log(x); }

}  // namespace

ExampleFamily build_example(const std::string& name, long long n, int r) {
  check_n(n);
  const long long sq = floor_sqrt(n);
  const long long lg = floor_log_natural(n);
  ExampleFamily fam;
  fam.name = name;

  if (name == "ex1" || name == "ex2") {
    std::vector<int> degs(n);
    degs[0] = static_cast<int>(n / 10);
    degs[1] = degs[2] = degs[3] = static_cast<int>(sq);
    for (long long i = 4; i < n; ++i) degs[i] = static_cast<int>(lg);
    fam.parity_adjusted = fix_parity(degs);
    fam.degrees = DegreeSequence(std::move(degs));
    fam.target = LabelledGraph::from_edges(static_cast<int>(n), {{1, 2}, {1, 3}, {2, 3}});
    fam.conditioning = LabelledGraph::empty(static_cast<int>(n));
    fam.mode = DiagnosticReport::Mode::contain;
    fam.asymptotic_target = 1.0 / std::pow(ln(static_cast<double>(n)), 3);
    fam.target_formula = "1/ln(n)^3";
    if (name == "ex2") {
      // Spanning r-regular circulant with hop offsets 3..(2 + r/2); offsets
      // stay clear of the triangle's hops 1 and 2, so L avoids X.
      if (r < 2 || r % 2 != 0) fail(ErrorKind::invalid_input, "ex2 needs an even r >= 2");
      const int max_offset = 2 + r / 2;
      if (n < 2LL * max_offset + 1) fail(ErrorKind::invalid_input, "n too small for the requested r");
      std::vector<Edge> l_edges;
      for (int offset = 3; offset <= max_offset; ++offset)
        for (long long i = 0; i < n; ++i) {
          const int a = static_cast<int>(i);
          const int b = static_cast<int>((i + offset) % n);
          if (a < b) l_edges.push_back({a, b});
          else l_edges.push_back({b, a});
        }
      fam.conditioning = LabelledGraph::from_edges(static_cast<int>(n), std::move(l_edges));
      fam.notes = "conditioning graph: circulant with offsets 3..";
    }
    return fam;
  }

  if (name == "ex3") {
    std::vector<int> degs(n);
    degs[0] = static_cast<int>(sq);
    for (long long i = 1; i < n; ++i) degs[i] = static_cast<int>(lg);
    fam.parity_adjusted = fix_parity(degs);
    fam.degrees = DegreeSequence(std::move(degs));
    std::vector<Edge> cycle;
    for (long long i = 0; i < sq; ++i) {
      int a = static_cast<int>(i), b = static_cast<int>((i + 1) % sq);
      if (a > b) std::swap(a, b);
      cycle.push_back({a, b});
    }
    fam.target = LabelledGraph::from_edges(static_cast<int>(n), std::move(cycle));
    fam.conditioning = LabelledGraph::empty(static_cast<int>(n));
    fam.mode = DiagnosticReport::Mode::contain;
    // log10 of the simplified upper-bound scale n (ln n)^(2k-2) / (2^k [m]_k)
    const double k = static_cast<double>(sq);
    const double m_g = (static_cast<double>(sq) + static_cast<double>(lg) * (n - 1)) / 2.0 -
                       (fam.parity_adjusted ? 0.5 : 0.0);
    double log_target = std::log10(static_cast<double>(n)) +
                        (2 * k - 2) * std::log10(ln(static_cast<double>(n))) -
                        k * std::log10(2.0) +
                        (std::lgamma(m_g - k + 1) - std::lgamma(m_g + 1)) / std::log(10.0);
    fam.asymptotic_target = log_target;
    fam.target_formula = "log10 of n ln(n)^(2k-2) / (2^k [m]_k), k = cycle length";
    return fam;
  }

  if (name == "ex4") {
    std::vector<int> degs(n);
    degs[0] = static_cast<int>(n / 4);
    degs[1] = static_cast<int>(sq);
    for (long long i = 2; i < n; ++i) degs[i] = static_cast<int>(lg);
    fam.parity_adjusted = fix_parity(degs);
    fam.degrees = DegreeSequence(std::move(degs));
    fam.target = LabelledGraph::from_edges(static_cast<int>(n), {{0, 1}, {0, 2}, {1, 2}});
    fam.conditioning = LabelledGraph::empty(static_cast<int>(n));
    fam.mode = DiagnosticReport::Mode::forbid;
    const double root = std::sqrt(static_cast<double>(n));
    fam.asymptotic_target = 0.8 / (1.0 + root / (4.0 * ln(static_cast<double>(n))));
    fam.target_formula = "(4/5) (1 + sqrt(n)/(4 ln n))^-1";
    return fam;
  }

  if (name == "ex5") {
    std::vector<int> s(n);
    s[0] = static_cast<int>(n / 2);
    for (long long i = 1; i < n; ++i) s[i] = static_cast<int>(sq);
    long long s_sum = 0;
    for (int d : s) s_sum += d;
    // Right part: log-degree vertices plus one remainder vertex so the sides
    // balance exactly.
    const long long full = s_sum / lg;
    const long long rem = s_sum % lg;
    std::vector<int> t(full + (rem > 0 ? 1 : 0));
    for (long long j = 0; j < full; ++j) t[j] = static_cast<int>(lg);
    if (rem > 0) {
      t[full] = static_cast<int>(rem);
      fam.notes = "right part carries one remainder vertex to balance the degree sums";
    }
    fam.left = DegreeSequence(std::move(s), Part::bipartite_left);
    fam.right = DegreeSequence(std::move(t), Part::bipartite_right);
    fam.bipartite = true;
    const int tn = fam.right.size();
    fam.target_bip = BipartiteGraph::from_edges(static_cast<int>(n), tn, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    fam.conditioning_bip = BipartiteGraph::empty(static_cast<int>(n), tn);
    fam.mode = DiagnosticReport::Mode::contain;
    const double lnn = ln(static_cast<double>(n));
    fam.asymptotic_target = std::pow(lnn, 4) / (4.0 * std::pow(static_cast<double>(n), 3));
    fam.target_formula = "ln(n)^4 / (4 n^3)  (4-cycle through the heaviest left vertex)";
    return fam;
  }

  fail(ErrorKind::invalid_input, "unknown example name (expected ex1..ex5)");
}

}  // namespace degbound
