#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "scpdnn/instance.hpp"
#include "scpdnn/solver.hpp"

namespace scp {

/// One solve, in the column vocabulary of the usual results table:
/// problem, p, n0, lbd, ubd, rel_gap, iter, time_sec. The assignment is
/// written with 1-based local rotamer indices.
struct ReportDocument {
  std::string problem;
  int p = 0;
  int n0 = 0;
  double lbd = 0.0;
  double ubd = 0.0;
  double rel_gap = 0.0;
  long iter = 0;
  double time_sec = 0.0;
  std::vector<int> assignment;
  Termination termination = Termination::max_iter;
  SolverParams params;
  Residuals residuals;
  bool dee = false;

  bool operator==(const ReportDocument&) const;
};

ReportDocument make_report(const ScpInstance& instance, const SolverParams& params, const SolveReport& result);

std::string serialize_report(const ReportDocument& report);
ReportDocument parse_report(std::string_view text);

std::string_view to_string(UpperSourceMode mode);
UpperSourceMode upper_source_from_string(std::string_view s);

}  // namespace scp
