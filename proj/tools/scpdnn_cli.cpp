// Command-line front end. Talks to the solver only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "scpdnn/scpdnn.h"

namespace {

constexpr int kExitError = 1;
constexpr int kExitMaxIter = 2;

struct Failure {
  std::string message;
};

void check(scp_status status, const std::string& context) {
  if (status != SCP_OK) throw Failure{context + ": " + scp_last_error()};
}

// Owns a malloc'd string from the library.
struct LibString {
  char* ptr = nullptr;
  ~LibString() { scp_string_free(ptr); }
};

struct InstanceHandle {
  scp_instance* ptr = nullptr;
  ~InstanceHandle() { scp_instance_free(ptr); }
};

struct ReportHandle {
  scp_report* ptr = nullptr;
  ~ReportHandle() { scp_report_free(ptr); }
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out || !(out << text)) throw Failure{"cannot write '" + out_path + "'"};
}

struct SolveOptions {
  std::string instance;
  std::string out;
  std::optional<double> beta;
  std::optional<double> gamma;
  std::optional<double> eps;
  std::optional<long> max_iter;
  std::optional<long> t;
  std::optional<long> bound_period;
  std::string upper_source = "both";
  bool dee = false;
  bool no_timing = false;
};

int run_solve(const SolveOptions& o) {
  InstanceHandle inst;
  check(scp_instance_load(o.instance.c_str(), &inst.ptr), "loading instance");

  scp_params params;
  check(scp_default_params(inst.ptr, &params), "default parameters");
  if (o.beta) params.beta = *o.beta;
  if (o.gamma) params.gamma = *o.gamma;
  if (o.eps) params.epsilon = *o.eps;
  if (o.max_iter) params.max_iter = *o.max_iter;
  if (o.t) params.t_consecutive = *o.t;
  if (o.bound_period) params.bound_period = *o.bound_period;
  params.upper_source = o.upper_source == "column" ? SCP_UPPER_COLUMN
                        : o.upper_source == "eig"  ? SCP_UPPER_EIG
                                                   : SCP_UPPER_BOTH;

  ReportHandle report;
  check(scp_solve(inst.ptr, &params, o.dee ? 1 : 0, &report.ptr), "solve");
  LibString text;
  check(scp_report_serialize(report.ptr, o.no_timing ? 0 : 1, &text.ptr), "serializing report");
  emit(text.ptr, o.out);

  return scp_report_termination(report.ptr) == SCP_TERM_MAX_ITER ? kExitMaxIter : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Side-chain positioning via a facially reduced DNN relaxation"};
  app.require_subcommand(1);

  SolveOptions solve_opts;
  auto* solve = app.add_subcommand("solve", "Solve an instance and print a report");
  solve->add_option("instance", solve_opts.instance, "Instance file")->required();
  solve->add_option("--out", solve_opts.out, "Write the report here instead of stdout");
  solve->add_option("--beta", solve_opts.beta, "Penalty parameter (>= 1)");
  solve->add_option("--gamma", solve_opts.gamma, "Dual step in (0, 1)");
  solve->add_option("--eps", solve_opts.eps, "Residual tolerance");
  solve->add_option("--max-iter", solve_opts.max_iter, "Iteration cap");
  solve->add_option("--t", solve_opts.t, "Consecutive sub-tolerance iterations required");
  solve->add_option("--bound-period", solve_opts.bound_period, "Iterations between bound evaluations");
  solve->add_option("--upper-source", solve_opts.upper_source, "Rounding source for upper bounds")
      ->check(CLI::IsMember({"column", "eig", "both"}));
  solve->add_flag("--dee", solve_opts.dee, "Run Goldstein dead-end elimination first");
  solve->add_flag("--no-timing", solve_opts.no_timing, "Write time_sec as 0 (reproducible output)");

  int gen_p = 1;
  int gen_m_max = 1;
  std::vector<double> gen_range{-10.0, 10.0};
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--p", gen_p, "Number of positions")->required()->check(CLI::PositiveNumber);
  gen->add_option("--m-max", gen_m_max, "Largest rotamer set size")->required()->check(CLI::PositiveNumber);
  gen->add_option("--range", gen_range, "Energy interval: LO HI")->expected(2);
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  std::string oracle_instance;
  std::uint64_t oracle_limit = 1000000;
  std::string oracle_out;
  auto* oracle = app.add_subcommand("oracle", "Exact optimum by enumeration");
  oracle->add_option("instance", oracle_instance, "Instance file")->required();
  oracle->add_option("--limit", oracle_limit, "Maximum number of selections to enumerate");
  oracle->add_option("--out", oracle_out, "Output file (default stdout)");

  std::string dee_instance;
  std::string dee_out;
  auto* dee = app.add_subcommand("dee", "Goldstein dead-end elimination");
  dee->add_option("instance", dee_instance, "Instance file")->required();
  dee->add_option("--out", dee_out, "Reduced instance file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return run_solve(solve_opts);

    if (*gen) {
      InstanceHandle inst;
      check(scp_instance_random(gen_p, gen_m_max, gen_range[0], gen_range[1], gen_seed, &inst.ptr),
            "generating instance");
      LibString text;
      check(scp_instance_serialize(inst.ptr, &text.ptr), "serializing instance");
      emit(text.ptr, gen_out);
      return 0;
    }

    if (*oracle) {
      InstanceHandle inst;
      check(scp_instance_load(oracle_instance.c_str(), &inst.ptr), "loading instance");
      LibString text;
      check(scp_oracle(inst.ptr, oracle_limit, nullptr, &text.ptr), "oracle");
      emit(text.ptr, oracle_out);
      return 0;
    }

    if (*dee) {
      InstanceHandle inst;
      check(scp_instance_load(dee_instance.c_str(), &inst.ptr), "loading instance");
      InstanceHandle reduced;
      LibString summary;
      check(scp_dee(inst.ptr, &reduced.ptr, &summary.ptr), "dead-end elimination");
      check(scp_instance_save(reduced.ptr, dee_out.c_str()), "writing reduced instance");
      std::cout << summary.ptr;
      return 0;
    }
  } catch (const Failure& f) {
    std::cerr << "scpdnn: " << f.message << "\n";
    return kExitError;
  }
  return kExitError;
}
