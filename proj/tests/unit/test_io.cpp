#include <sstream>

#include <nlohmann/json.hpp>

#include "degbound/problem_file.hpp"
#include "degbound/report.hpp"
#include "doctest.h"

using namespace degbound;

TEST_CASE("problem files parse") {
  SUBCASE("generic") {
    std::istringstream in(
        "# six matched vertices\n"
        "degrees: 1 1 1 1 1 1\n"
        "require: 0 1\n"
        "forbid: 2 3  # keep these apart\n");
    ParsedProblem p = parse_problem(in);
    CHECK_FALSE(p.bipartite);
    CHECK(p.degrees.degrees == std::vector<int>{1, 1, 1, 1, 1, 1});
    REQUIRE(p.require_edges.size() == 1);
    CHECK(p.require_edges[0] == Edge{0, 1});
    REQUIRE(p.forbid_edges.size() == 1);
    ProblemInstance inst = p.generic_instance();
    inst.validate();
    CHECK(inst.forbidden.has_edge(2, 3));
  }
  SUBCASE("bipartite") {
    std::istringstream in(
        "left-degrees: 1 1 1\n"
        "right-degrees: 1 1 1\n"
        "require: 0 0\n");
    ParsedProblem p = parse_problem(in);
    CHECK(p.bipartite);
    BipartiteInstance inst = p.bipartite_instance();
    inst.validate();
    CHECK(inst.required.has_edge(0, 0));
  }
  SUBCASE("rejects malformed input") {
    auto expect_parse_error = [](const std::string& text) {
      std::istringstream in(text);
      CHECK_THROWS_AS(parse_problem(in), Error);
    };
    expect_parse_error("degrees: 1 2 x\n");
    expect_parse_error("degrees: 1 1\nrequire: 0\n");
    expect_parse_error("degrees: 1 1\nleft-degrees: 1\nright-degrees: 1\n");
    expect_parse_error("require: 0 1\n");
    expect_parse_error("degrees: 1 1\nrequire: 0 5\n");
    expect_parse_error("degrees: 1 1\nwibble: 3\n");
    expect_parse_error("degrees: -1 1\n");
  }
}

TEST_CASE("report JSON round-trips exactly") {
  Report r;
  r.command = "bound single 0 1";
  r.instance = "n=6 generic";
  r.add("upper", ReportValue::rational(make_rational(1, 5)));
  r.add("lower", ReportValue::rational(make_rational(7, 207)));
  r.add("count", ReportValue::integer(BigInt("654729075")));
  r.add("estimate", ReportValue::real(0.052631578947368418));
  r.add("note", ReportValue::text("clamped"));
  r.add("applicable", ReportValue::boolean(true));
  r.flag("order", "given");
  r.elapsed_seconds = 1.25;

  nlohmann::json j = report_to_json(r);
  Report back = report_from_json(j);
  CHECK(reports_equivalent(r, back));

  // serialized rationals keep their exact value through a reparse
  nlohmann::json j2 = report_to_json(back);
  CHECK(j.at("results") == j2.at("results"));

  Report different = back;
  different.results[0].second = ReportValue::rational(make_rational(1, 6));
  CHECK_FALSE(reports_equivalent(r, different));
}

TEST_CASE("text rendering mentions keys and values") {
  Report r;
  r.command = "exact";
  r.instance = "n=6";
  r.add("probability", ReportValue::rational(make_rational(1, 5)));
  std::ostringstream os;
  print_report_text(os, r);
  const std::string text = os.str();
  CHECK(text.find("probability") != std::string::npos);
  CHECK(text.find("1/5") != std::string::npos);
  CHECK(text.find("0.2") != std::string::npos);
}
