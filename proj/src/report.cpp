#include "scpdnn/report.hpp"

#include <limits>

#include "json.hpp"

#include "scpdnn/error.hpp"

namespace scp {

namespace {

using Json = nlohmann::ordered_json;

// NaN compares unequal to itself; reports may legitimately carry one when
// u + l + 1 = 0.
bool same(double a, double b) { return a == b || (a != a && b != b); }

// JSON has no NaN; the serializer writes null for it.
double number(const Json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

}  // namespace

bool ReportDocument::operator==(const ReportDocument& o) const {
  return problem == o.problem && p == o.p && n0 == o.n0 && same(lbd, o.lbd) && same(ubd, o.ubd) &&
         same(rel_gap, o.rel_gap) && iter == o.iter && same(time_sec, o.time_sec) &&
         assignment == o.assignment && termination == o.termination && params == o.params &&
         same(residuals.primal, o.residuals.primal) && same(residuals.dual, o.residuals.dual) && dee == o.dee;
}

std::string_view to_string(UpperSourceMode mode) {
  switch (mode) {
    case UpperSourceMode::column: return "column";
    case UpperSourceMode::eig: return "eig";
    case UpperSourceMode::both: return "both";
  }
  return "both";
}

UpperSourceMode upper_source_from_string(std::string_view s) {
  if (s == "column") return UpperSourceMode::column;
  if (s == "eig") return UpperSourceMode::eig;
  if (s == "both") return UpperSourceMode::both;
  throw Error(ErrorCode::invalid_argument, "upper source must be column, eig or both");
}

ReportDocument make_report(const ScpInstance& instance, const SolverParams& params, const SolveReport& result) {
  ReportDocument doc;
  doc.problem = instance.name;
  doc.p = instance.partition.blocks();
  doc.n0 = instance.partition.total();
  doc.lbd = result.lbd;
  doc.ubd = result.ubd;
  doc.rel_gap = result.rel_gap;
  doc.iter = result.iterations;
  doc.time_sec = result.time_sec;
  for (int c : result.assignment.choice) doc.assignment.push_back(c + 1);
  doc.termination = result.termination;
  doc.params = params;
  doc.residuals = result.residuals;
  return doc;
}

std::string serialize_report(const ReportDocument& r) {
  Json params;
  params["beta"] = r.params.beta;
  params["gamma"] = r.params.gamma;
  params["eps"] = r.params.epsilon;
  params["max_iter"] = r.params.max_iter;
  params["t"] = r.params.t_consecutive;
  params["bound_period"] = r.params.bound_period;
  params["upper_source"] = std::string(to_string(r.params.upper_sources));

  Json doc;
  doc["problem"] = r.problem;
  doc["p"] = r.p;
  doc["n0"] = r.n0;
  doc["lbd"] = r.lbd;
  doc["ubd"] = r.ubd;
  doc["rel_gap"] = r.rel_gap;
  doc["iter"] = r.iter;
  doc["time_sec"] = r.time_sec;
  doc["assignment"] = r.assignment;
  doc["termination"] = std::string(to_string(r.termination));
  doc["residuals"] = Json{{"primal", r.residuals.primal}, {"dual", r.residuals.dual}};
  doc["dee"] = r.dee;
  doc["params"] = std::move(params);
  return doc.dump(2) + "\n";
}

ReportDocument parse_report(std::string_view text) {
  try {
    const Json doc = Json::parse(text);
    ReportDocument r;
    r.problem = doc.at("problem").get<std::string>();
    r.p = doc.at("p").get<int>();
    r.n0 = doc.at("n0").get<int>();
    r.lbd = doc.at("lbd").get<double>();
    r.ubd = doc.at("ubd").get<double>();
    r.rel_gap = number(doc.at("rel_gap"));
    r.iter = doc.at("iter").get<long>();
    r.time_sec = doc.at("time_sec").get<double>();
    r.assignment = doc.at("assignment").get<std::vector<int>>();
    r.termination = termination_from_string(doc.at("termination").get<std::string>());
    r.residuals.primal = doc.at("residuals").at("primal").get<double>();
    r.residuals.dual = doc.at("residuals").at("dual").get<double>();
    r.dee = doc.value("dee", false);
    const auto& params = doc.at("params");
    r.params.beta = params.at("beta").get<double>();
    r.params.gamma = params.at("gamma").get<double>();
    r.params.epsilon = params.at("eps").get<double>();
    r.params.max_iter = params.at("max_iter").get<long>();
    r.params.t_consecutive = params.at("t").get<long>();
    r.params.bound_period = params.at("bound_period").get<long>();
    r.params.upper_sources = upper_source_from_string(params.at("upper_source").get<std::string>());
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse, std::string("malformed report: ") + e.what());
  }
}

}  // namespace scp
