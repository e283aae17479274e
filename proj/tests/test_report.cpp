#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "scpdnn/error.hpp"
#include "scpdnn/report.hpp"

using namespace scp;

TEST_CASE("report round trip") {
  const auto inst = random_instance(4, 4, -10, 10, 8);
  const auto params = default_params(inst);
  const auto doc = make_report(inst, params, solve(inst, params));
  CHECK(doc.p == 4);
  CHECK(doc.n0 == inst.partition.total());
  CHECK(doc.assignment.size() == 4);
  for (int c : doc.assignment) CHECK(c >= 1);
  const auto text = serialize_report(doc);
  CHECK(parse_report(text) == doc);
  CHECK(serialize_report(parse_report(text)) == text);
}

TEST_CASE("report rel_gap matches the emitted bounds") {
  const auto inst = testing::small_instance();
  const auto params = default_params(inst);
  const auto back = parse_report(serialize_report(make_report(inst, params, solve(inst, params))));
  CHECK(back.rel_gap == relative_gap(back.ubd, back.lbd));
  CHECK(back.ubd == 6.0);
  CHECK(back.assignment == std::vector<int>{1, 2});
}

TEST_CASE("report with an undefined gap") {
  ReportDocument doc;
  doc.problem = "edge";
  doc.rel_gap = std::nan("");
  CHECK(parse_report(serialize_report(doc)) == doc);
}

TEST_CASE("malformed reports") {
  CHECK_THROWS_AS(parse_report("{}"), Error);
  CHECK_THROWS_AS(parse_report("[1, 2]"), Error);
  CHECK_THROWS_AS(upper_source_from_string("lp"), Error);
  CHECK_THROWS_AS(termination_from_string("done"), Error);
}
