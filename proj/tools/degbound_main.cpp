// Command-line front end: evaluates the switching-based probability bounds,
// exact enumeration, switching censuses, claim verification sweeps, Monte
// Carlo estimates, and the built-in example families.
//
// Exit codes: 0 ok, 2 parse error, 3 no applicable bound, 4 resource limit,
// 5 example applicability failure, 1 other errors / sweep violations.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "degbound/bipartite_bounds.hpp"
#include "degbound/example_families.hpp"
#include "degbound/generic_bounds.hpp"
#include "degbound/oracle.hpp"
#include "degbound/problem_file.hpp"
#include "degbound/report.hpp"

using namespace degbound;

namespace {

struct CommonOpts {
  std::string file;
  std::string format = "text";
  std::string out;
  std::string order = "given";
  std::uint64_t seed = 0;
  long long node_budget = 100'000'000;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_file) {
  auto* f = cmd->add_option("-f,--file", opts.file, "problem file");
  if (needs_file) f->required();
  cmd->add_option("--format", opts.format, "output format (text|json)")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", opts.out, "write the report to a file instead of stdout");
  cmd->add_option("--order", opts.order, "edge order policy (given|random|best-of:N)");
  cmd->add_option("--seed", opts.seed, "random seed for order shuffles and sampling");
  cmd->add_option("--node-budget", opts.node_budget, "enumeration search-node budget");
}

EdgeOrder parse_order(const CommonOpts& opts) {
  if (opts.order == "given") return EdgeOrder::given();
  if (opts.order == "random") return EdgeOrder::random(opts.seed);
  if (opts.order.rfind("best-of:", 0) == 0) {
    const int n = std::stoi(opts.order.substr(8));
    if (n < 1) fail(ErrorKind::parse_error, "best-of needs a positive count");
    return EdgeOrder::best_of(n, opts.seed);
  }
  fail(ErrorKind::parse_error, "unknown order policy '" + opts.order + "'");
}

void emit(Report& report, const CommonOpts& opts,
          std::chrono::steady_clock::time_point started) {
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  std::ostream* os = &std::cout;
  std::ofstream file_out;
  if (!opts.out.empty()) {
    file_out.open(opts.out);
    if (!file_out) fail(ErrorKind::invalid_input, "cannot open output file '" + opts.out + "'");
    os = &file_out;
  }
  if (opts.format == "json")
    print_report_json(*os, report);
  else
    print_report_text(*os, report);
}

std::string describe_instance(const ParsedProblem& p) {
  std::ostringstream os;
  if (p.bipartite)
    os << "bipartite m=" << p.left.size() << " n=" << p.right.size();
  else
    os << "generic n=" << p.degrees.size();
  os << " require=" << p.require_edges.size() << " forbid=" << p.forbid_edges.size();
  return os.str();
}

void add_bound_fields(Report& report, const ProbabilityBound& b) {
  report.flag("theorem", b.theorem);
  if (b.exact_zero) report.flag("outcome", "probability is identically zero");
  if (b.upper_raw) {
    report.add("upper (raw)", ReportValue::rational(*b.upper_raw));
    report.add("upper", ReportValue::rational(*b.upper_clamped));
  } else {
    report.flag("upper", "inapplicable");
  }
  if (b.lower) {
    report.add("lower", ReportValue::rational(*b.lower));
  } else {
    report.flag("lower", "inapplicable");
  }
  for (const EdgeTermInfo& t : b.terms) {
    std::ostringstream key;
    key << "edge " << t.edge.u << "-" << t.edge.v;
    report.add(key.str() + " f", ReportValue::rational(t.f));
    report.add(key.str() + " g", ReportValue::rational(t.g));
    if (!t.f_positive) report.flag(key.str(), "f <= 0");
    if (!t.g_positive) report.flag(key.str(), "g <= 0");
  }
}

int applicability_exit(const ProbabilityBound& b) {
  return (b.upper_clamped || b.lower || b.exact_zero) ? 0 : 3;
}

void add_diag_fields(Report& report, const DiagnosticReport& diag) {
  auto put = [&](const char* key, const std::optional<Rational>& v) {
    if (v) report.add(key, ReportValue::rational(*v));
  };
  report.add(diag.mode == DiagnosticReport::Mode::contain ? "Pi" : "Phi",
             ReportValue::rational(diag.pi_or_phi));
  put("rho", diag.rho);
  if (diag.rho) report.flag("rho < 1", diag.rho_below_one ? "yes" : "no");
  if (diag.c_of_k) report.add("C = ln(1-rho)/rho", ReportValue::real(*diag.c_of_k));
  put("kappa", diag.kappa);
  put("mu", diag.mu);
  put("Lambda", diag.big_lambda);
  put("lambda", diag.lambda);
  put("eta", diag.eta);
  put("kappa_S", diag.kappa_s);
  put("kappa_T", diag.kappa_t);
  put("mu_S", diag.mu_s);
  put("mu_T", diag.mu_t);
  put("lambda_S", diag.lambda_s);
  put("lambda_T", diag.lambda_t);
  put("eta_S", diag.eta_s);
  put("eta_T", diag.eta_t);
}

int cmd_bound(const std::string& sub, const CommonOpts& opts, int edge_u, int edge_v) {
  const auto started = std::chrono::steady_clock::now();
  ParsedProblem p = parse_problem_file(opts.file);
  EdgeOrder order = parse_order(opts);
  Report report;
  report.command = "bound " + sub;
  report.instance = describe_instance(p);
  ProbabilityBound b;

  if (!p.bipartite) {
    ProblemInstance inst = p.generic_instance();
    if (sub == "single") {
      b = single_edge_bounds(inst.degrees, inst.required, inst.forbidden, {edge_u, edge_v});
    } else if (sub == "subgraph") {
      b = subgraph_bounds(inst.degrees, inst.required, inst.forbidden, order);
    } else {
      if (inst.required.edge_count() > 0)
        fail(ErrorKind::invalid_input, "forbidden-mode bounds take no require: edges");
      b = forbidden_bounds(inst.degrees, LabelledGraph::empty(inst.degrees.size()), inst.forbidden,
                           order);
    }
  } else {
    BipartiteInstance inst = p.bipartite_instance();
    if (sub == "single") {
      b = single_edge_bounds_bipartite(inst.left, inst.right, inst.required, inst.forbidden,
                                       {edge_u, edge_v});
    } else if (sub == "subgraph") {
      b = subgraph_bounds_bipartite(inst.left, inst.right, inst.required, inst.forbidden, order);
    } else {
      if (inst.required.edge_count() > 0)
        fail(ErrorKind::invalid_input, "forbidden-mode bounds take no require: edges");
      b = forbidden_bounds_bipartite(inst.left, inst.right,
                                     BipartiteGraph::empty(inst.left.size(), inst.right.size()),
                                     inst.forbidden, order);
    }
  }
  add_bound_fields(report, b);
  emit(report, opts, started);
  return applicability_exit(b);
}

int cmd_exact(const CommonOpts& opts, const std::string& event) {
  const auto started = std::chrono::steady_clock::now();
  ParsedProblem p = parse_problem_file(opts.file);
  EnumLimits limits{opts.node_budget};
  Report report;
  report.command = "exact --event " + event;
  report.instance = describe_instance(p);
  const EventKind kind = event == "avoids" ? EventKind::avoids : EventKind::contains;

  Rational prob;
  BigInt base_size;
  if (!p.bipartite) {
    ProblemInstance inst = p.generic_instance();
    const int n = inst.degrees.size();
    LabelledGraph base_forbidden =
        kind == EventKind::contains ? inst.forbidden : LabelledGraph::empty(n);
    if (kind == EventKind::avoids && inst.required.edge_count() > 0)
      fail(ErrorKind::invalid_input, "avoidance probabilities take no require: edges");
    ProblemInstance base{inst.degrees, LabelledGraph::empty(n), base_forbidden};
    const LabelledGraph& target = kind == EventKind::contains ? inst.required : inst.forbidden;
    prob = exact_probability(base, target, kind, limits);
    base_size = enumerate_class(base, limits).count;
  } else {
    BipartiteInstance inst = p.bipartite_instance();
    const int m = inst.left.size(), n = inst.right.size();
    BipartiteGraph base_forbidden =
        kind == EventKind::contains ? inst.forbidden : BipartiteGraph::empty(m, n);
    if (kind == EventKind::avoids && inst.required.edge_count() > 0)
      fail(ErrorKind::invalid_input, "avoidance probabilities take no require: edges");
    BipartiteInstance base{inst.left, inst.right, BipartiteGraph::empty(m, n), base_forbidden};
    const BipartiteGraph& target = kind == EventKind::contains ? inst.required : inst.forbidden;
    prob = exact_probability(base, target, kind, limits);
    base_size = enumerate_class(base, limits).count;
  }
  report.add("base class size", ReportValue::integer(base_size));
  report.add("probability", ReportValue::rational(prob));
  emit(report, opts, started);
  return 0;
}

int cmd_census(const CommonOpts& opts, int arity, const std::string& direction, int edge_u,
               int edge_v) {
  const auto started = std::chrono::steady_clock::now();
  ParsedProblem p = parse_problem_file(opts.file);
  EnumLimits limits{opts.node_budget};
  Edge uv{edge_u, edge_v};
  if (edge_u < 0 || edge_v < 0) {
    if (p.require_edges.size() != 1)
      fail(ErrorKind::invalid_input,
           "census needs --edge or exactly one require: edge as the distinguished pair");
    uv = p.require_edges[0];
  }
  Report report;
  report.command = "census";
  report.instance = describe_instance(p);
  report.flag("arity", std::to_string(arity));
  report.flag("edge", std::to_string(uv.u) + "-" + std::to_string(uv.v));

  long long fwd_total = -1, bwd_total = -1;
  auto run_direction = [&](SwitchDirection dir, const std::string& tag) {
    SwitchingCensus census;
    if (!p.bipartite) {
      LabelledGraph m_graph = LabelledGraph::from_edges(p.degrees.size(), p.forbid_edges);
      census = switching_census(p.degrees, uv, m_graph, arity, dir, limits);
    } else {
      BipartiteGraph m_graph =
          BipartiteGraph::from_edges(p.left.size(), p.right.size(), p.forbid_edges);
      census = switching_census_bipartite(p.left, p.right, uv, m_graph, arity, dir, limits);
    }
    report.add(tag + " class size",
               ReportValue::integer(BigInt(static_cast<long>(census.per_graph.size()))));
    report.add(tag + " total", ReportValue::integer(BigInt(static_cast<long>(census.class_total))));
    long long min = 0, max = 0;
    for (std::size_t i = 0; i < census.per_graph.size(); ++i) {
      min = i == 0 ? census.per_graph[i] : std::min(min, census.per_graph[i]);
      max = std::max(max, census.per_graph[i]);
    }
    report.add(tag + " per-graph min", ReportValue::integer(BigInt(static_cast<long>(min))));
    report.add(tag + " per-graph max", ReportValue::integer(BigInt(static_cast<long>(max))));
    return census.class_total;
  };

  if (direction == "forward" || direction == "both")
    fwd_total = run_direction(SwitchDirection::forward, "forward");
  if (direction == "backward" || direction == "both")
    bwd_total = run_direction(SwitchDirection::backward, "backward");
  if (direction == "both" && arity == 2)
    report.flag("double counting", fwd_total == bwd_total ? "forward total == backward total"
                                                          : "MISMATCH");
  if (direction == "both" && arity == 3)
    report.flag("double counting", fwd_total == bwd_total ? "forward total == backward total"
                                                          : "MISMATCH");
  emit(report, opts, started);
  return 0;
}

int cmd_verify(const CommonOpts& opts, const std::string& suite, int max_n, int max_sum) {
  const auto started = std::chrono::steady_clock::now();
  ClaimSweepConfig config;
  config.generic = suite != "bipartite";
  config.bipartite = suite != "generic";
  if (max_n > 0) config.max_n = max_n;
  if (max_sum > 0) config.max_degree_sum = max_sum;
  if (opts.seed) config.seed = opts.seed;
  config.node_budget = opts.node_budget;
  ClaimSweepReport rep = verify_claims(config);
  Report report;
  report.command = "verify --suite " + suite;
  report.instance = "switching claim sweep";
  report.add("classes checked", ReportValue::integer(BigInt(static_cast<long>(rep.classes_checked))));
  report.add("graphs checked", ReportValue::integer(BigInt(static_cast<long>(rep.graphs_checked))));
  report.add("claims checked", ReportValue::integer(BigInt(static_cast<long>(rep.claims_checked))));
  report.add("violations", ReportValue::integer(BigInt(static_cast<long>(rep.violations))));
  if (rep.violations > 0) report.flag("first violation", rep.first_violation);
  emit(report, opts, started);
  return rep.violations == 0 ? 0 : 1;
}

int cmd_sample(const CommonOpts& opts, long long steps, long long burn_in, const std::string& event) {
  const auto started = std::chrono::steady_clock::now();
  ParsedProblem p = parse_problem_file(opts.file);
  const EventKind kind = event == "avoids" ? EventKind::avoids : EventKind::contains;
  Report report;
  report.command = "sample";
  report.instance = describe_instance(p);

  McmcResult res;
  if (!p.bipartite) {
    const int n = p.degrees.size();
    LabelledGraph target = LabelledGraph::from_edges(n, p.require_edges);
    LabelledGraph constraints = LabelledGraph::from_edges(n, p.forbid_edges);
    if (kind == EventKind::avoids) {
      if (!p.require_edges.empty())
        fail(ErrorKind::invalid_input, "avoidance sampling takes no require: edges");
      target = constraints;
      constraints = LabelledGraph::empty(n);
    }
    ProblemInstance chain{p.degrees, LabelledGraph::empty(n), constraints};
    res = mcmc_estimate(chain, target, kind, steps, burn_in, opts.seed);
  } else {
    const int m = p.left.size(), n = p.right.size();
    BipartiteGraph target = BipartiteGraph::from_edges(m, n, p.require_edges);
    BipartiteGraph constraints = BipartiteGraph::from_edges(m, n, p.forbid_edges);
    if (kind == EventKind::avoids) {
      if (!p.require_edges.empty())
        fail(ErrorKind::invalid_input, "avoidance sampling takes no require: edges");
      target = constraints;
      constraints = BipartiteGraph::empty(m, n);
    }
    BipartiteInstance chain{p.left, p.right, BipartiteGraph::empty(m, n), constraints};
    res = mcmc_estimate_bipartite(chain, target, kind, steps, burn_in, opts.seed);
  }
  report.add("estimate", ReportValue::real(res.estimate));
  report.add("std error", ReportValue::real(res.std_error));
  report.add("half width (1.96 sigma)", ReportValue::real(1.96 * res.std_error));
  report.add("acceptance rate", ReportValue::real(res.acceptance_rate));
  report.add("steps", ReportValue::integer(BigInt(static_cast<long>(res.steps))));
  report.add("burn-in", ReportValue::integer(BigInt(static_cast<long>(res.burn_in))));
  report.add("seed", ReportValue::integer(BigInt(static_cast<long>(res.seed))));
  report.flag("certified", "no - diagnostic estimate only");
  emit(report, opts, started);
  return 0;
}

int cmd_diagnose(const CommonOpts& opts, const std::string& event) {
  const auto started = std::chrono::steady_clock::now();
  ParsedProblem p = parse_problem_file(opts.file);
  const auto mode =
      event == "avoids" ? DiagnosticReport::Mode::forbid : DiagnosticReport::Mode::contain;
  Report report;
  report.command = "diagnose";
  report.instance = describe_instance(p);
  DiagnosticReport diag;
  if (!p.bipartite) {
    ProblemInstance inst = p.generic_instance();
    const int n = inst.degrees.size();
    if (mode == DiagnosticReport::Mode::contain) {
      diag = corollary_diagnostics(inst.degrees, inst.required, inst.forbidden, mode);
    } else {
      if (inst.required.edge_count() > 0)
        fail(ErrorKind::invalid_input, "avoidance diagnostics take no require: edges");
      diag = corollary_diagnostics(inst.degrees, inst.forbidden, LabelledGraph::empty(n), mode);
    }
  } else {
    BipartiteInstance inst = p.bipartite_instance();
    const int m = inst.left.size(), n = inst.right.size();
    if (mode == DiagnosticReport::Mode::contain) {
      diag = corollary_diagnostics_bipartite(inst.left, inst.right, inst.required, inst.forbidden,
                                             mode);
    } else {
      if (inst.required.edge_count() > 0)
        fail(ErrorKind::invalid_input, "avoidance diagnostics take no require: edges");
      diag = corollary_diagnostics_bipartite(inst.left, inst.right, inst.forbidden,
                                             BipartiteGraph::empty(m, n), mode);
    }
  }
  add_diag_fields(report, diag);
  emit(report, opts, started);
  return 0;
}

int cmd_examples(const CommonOpts& opts, const std::string& name, long long n, int r) {
  const auto started = std::chrono::steady_clock::now();
  ExampleFamily fam = build_example(name, n, r);
  EdgeOrder order = parse_order(opts);
  Report report;
  report.command = "examples " + name;
  std::ostringstream inst;
  inst << name << " at n=" << n;
  report.instance = inst.str();
  if (fam.parity_adjusted) report.flag("parity", "last degree entry reduced by one");
  if (!fam.notes.empty()) report.flag("construction", fam.notes);

  ProbabilityBound b;
  DiagnosticReport diag;
  if (!fam.bipartite) {
    if (fam.mode == DiagnosticReport::Mode::contain)
      b = subgraph_bounds(fam.degrees, fam.target, fam.conditioning, order);
    else
      b = forbidden_bounds(fam.degrees, fam.conditioning, fam.target, order);
    diag = corollary_diagnostics(fam.degrees, fam.target, fam.conditioning, fam.mode);
  } else {
    if (fam.mode == DiagnosticReport::Mode::contain)
      b = subgraph_bounds_bipartite(fam.left, fam.right, fam.target_bip, fam.conditioning_bip, order);
    else
      b = forbidden_bounds_bipartite(fam.left, fam.right, fam.conditioning_bip, fam.target_bip, order);
    diag = corollary_diagnostics_bipartite(fam.left, fam.right, fam.target_bip, fam.conditioning_bip,
                                           fam.mode);
  }

  if (b.upper_raw) {
    report.add("upper (raw)", ReportValue::rational(*b.upper_raw));
    report.add("upper", ReportValue::rational(*b.upper_clamped));
    report.add("upper multiplier", ReportValue::rational(*b.upper_raw / diag.pi_or_phi));
  }
  if (b.lower) {
    report.add("lower", ReportValue::rational(*b.lower));
    report.add("lower multiplier", ReportValue::rational(*b.lower / diag.pi_or_phi));
  }
  if (b.lower && b.upper_clamped && *b.lower > 0)
    report.add("upper/lower ratio", ReportValue::rational(*b.upper_clamped / *b.lower));
  report.add("asymptotic target", ReportValue::real(fam.asymptotic_target));
  report.flag("target formula", fam.target_formula);
  add_diag_fields(report, diag);

  if (name == "ex3" && diag.kappa && diag.c_of_k) {
    // Refined upper-bound multiplier: stop the simplification at the weighted
    // average kappa instead of the boundary maximum degree.
    const long long m_g = fam.degrees.sum() / 2;
    const long long m_x = fam.target.edge_count();
    Rational d_kappa = degree_sum(fam.degrees, ExcludedSet{}, *diag.kappa);
    report.add("D(kappa)", ReportValue::rational(d_kappa));
    const double exponent = *diag.c_of_k * static_cast<double>(m_x) * d_kappa.get_d() /
                            static_cast<double>(m_g - m_x);
    report.add("kappa-refined upper multiplier", ReportValue::real(std::exp(-exponent)));
  }

  emit(report, opts, started);

  const bool needs_lower = name != "ex3";
  if (!b.upper_clamped || (needs_lower && !b.lower)) return 5;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-size probability bounds for uniform random graphs with "
               "prescribed degree sequences, with exact enumeration oracles"};
  app.require_subcommand(1);

  CommonOpts opts;

  auto* bound = app.add_subcommand("bound", "evaluate certified probability bounds");
  bound->require_subcommand(1);
  int edge_u = -1, edge_v = -1;
  auto* bound_single = bound->add_subcommand("single", "single-edge bounds");
  bound_single->add_option("u", edge_u, "first endpoint")->required();
  bound_single->add_option("v", edge_v, "second endpoint")->required();
  add_common(bound_single, opts, true);
  auto* bound_subgraph = bound->add_subcommand("subgraph", "containment bounds for the require: set");
  add_common(bound_subgraph, opts, true);
  auto* bound_forbidden = bound->add_subcommand("forbidden", "avoidance bounds for the forbid: set");
  add_common(bound_forbidden, opts, true);

  std::string event = "contains";
  auto* exact = app.add_subcommand("exact", "exact probability by enumeration");
  exact->add_option("--event", event, "contains|avoids")->check(CLI::IsMember({"contains", "avoids"}));
  add_common(exact, opts, true);

  int arity = 2;
  std::string direction = "both";
  std::vector<int> census_edge;
  auto* census = app.add_subcommand("census", "per-graph switching censuses");
  census->add_option("--arity", arity, "2 or 3")->check(CLI::IsMember({"2", "3"}));
  census->add_option("--direction", direction, "forward|backward|both")
      ->check(CLI::IsMember({"forward", "backward", "both"}));
  census->add_option("--edge", census_edge, "distinguished edge u v")->expected(2);
  add_common(census, opts, true);

  std::string suite = "default";
  int verify_max_n = 0, verify_max_sum = 0;
  auto* verify = app.add_subcommand("verify", "exhaustive switching claim sweep");
  verify->add_option("--suite", suite, "default|generic|bipartite")
      ->check(CLI::IsMember({"default", "generic", "bipartite"}));
  verify->add_option("--max-n", verify_max_n, "largest generic vertex count");
  verify->add_option("--max-sum", verify_max_sum, "largest generic degree sum");
  add_common(verify, opts, false);

  long long steps = 1'000'000, burn_in = 10'000;
  auto* sample = app.add_subcommand("sample", "diagnostic 2-switch Monte Carlo estimate");
  sample->add_option("--steps", steps, "chain steps after burn-in");
  sample->add_option("--burn-in", burn_in, "discarded initial steps");
  sample->add_option("--event", event, "contains|avoids")->check(CLI::IsMember({"contains", "avoids"}));
  add_common(sample, opts, true);

  auto* diagnose = app.add_subcommand("diagnose", "corollary-style diagnostic quantities");
  diagnose->add_option("--event", event, "contains|avoids")
      ->check(CLI::IsMember({"contains", "avoids"}));
  add_common(diagnose, opts, true);

  std::string example_name;
  long long example_n = 1'000'000;
  int example_r = 2;
  auto* examples = app.add_subcommand("examples", "evaluate a built-in example family");
  examples->add_option("name", example_name, "ex1|ex2|ex3|ex4|ex5")
      ->required()
      ->check(CLI::IsMember({"ex1", "ex2", "ex3", "ex4", "ex5"}));
  examples->add_option("--n", example_n, "family size parameter");
  examples->add_option("--r", example_r, "regularity of the forbidden circulant (ex2)");
  add_common(examples, opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bound_single->parsed()) return cmd_bound("single", opts, edge_u, edge_v);
    if (bound_subgraph->parsed()) return cmd_bound("subgraph", opts, -1, -1);
    if (bound_forbidden->parsed()) return cmd_bound("forbidden", opts, -1, -1);
    if (exact->parsed()) return cmd_exact(opts, event);
    if (census->parsed())
      return cmd_census(opts, arity, direction, census_edge.size() == 2 ? census_edge[0] : -1,
                        census_edge.size() == 2 ? census_edge[1] : -1);
    if (verify->parsed()) return cmd_verify(opts, suite, verify_max_n, verify_max_sum);
    if (sample->parsed()) return cmd_sample(opts, steps, burn_in, event);
    if (diagnose->parsed()) return cmd_diagnose(opts, event);
    if (examples->parsed()) return cmd_examples(opts, example_name, example_n, example_r);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::parse_error:
        return 2;
      case ErrorKind::resource_limit:
        return 4;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
