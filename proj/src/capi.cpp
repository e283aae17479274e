#include "scpdnn/scpdnn.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "json.hpp"

#include "scpdnn/error.hpp"
#include "scpdnn/instance.hpp"
#include "scpdnn/oracle.hpp"
#include "scpdnn/report.hpp"
#include "scpdnn/solver.hpp"

struct scp_instance {
  scp::ScpInstance value;
};

struct scp_report {
  scp::ReportDocument doc;
};

namespace {

thread_local std::string g_last_error;

scp_status to_status(scp::ErrorCode code) {
  switch (code) {
    case scp::ErrorCode::invalid_argument: return SCP_ERR_INVALID_ARGUMENT;
    case scp::ErrorCode::parse: return SCP_ERR_PARSE;
    case scp::ErrorCode::io: return SCP_ERR_IO;
    case scp::ErrorCode::too_large: return SCP_ERR_TOO_LARGE;
    case scp::ErrorCode::numerical: return SCP_ERR_NUMERICAL;
  }
  return SCP_ERR_INTERNAL;
}

template <class F>
scp_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return SCP_OK;
  } catch (const scp::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SCP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SCP_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw scp::Error(scp::ErrorCode::invalid_argument, std::string(what) + " is null");
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

scp::SolverParams from_c(const scp_params& p) {
  scp::SolverParams out;
  out.beta = p.beta;
  out.gamma = p.gamma;
  out.epsilon = p.epsilon;
  out.max_iter = static_cast<long>(p.max_iter);
  out.t_consecutive = static_cast<long>(p.t_consecutive);
  out.bound_period = static_cast<long>(p.bound_period);
  switch (p.upper_source) {
    case SCP_UPPER_COLUMN: out.upper_sources = scp::UpperSourceMode::column; break;
    case SCP_UPPER_EIG: out.upper_sources = scp::UpperSourceMode::eig; break;
    case SCP_UPPER_BOTH: out.upper_sources = scp::UpperSourceMode::both; break;
    default: throw scp::Error(scp::ErrorCode::invalid_argument, "unknown upper_source");
  }
  return out;
}

scp_params to_c(const scp::SolverParams& p) {
  scp_params out{};
  out.beta = p.beta;
  out.gamma = p.gamma;
  out.epsilon = p.epsilon;
  out.max_iter = p.max_iter;
  out.t_consecutive = p.t_consecutive;
  out.bound_period = p.bound_period;
  out.upper_source = p.upper_sources == scp::UpperSourceMode::column ? SCP_UPPER_COLUMN
                     : p.upper_sources == scp::UpperSourceMode::eig  ? SCP_UPPER_EIG
                                                                     : SCP_UPPER_BOTH;
  return out;
}

}  // namespace

extern "C" {

const char* scp_last_error(void) { return g_last_error.c_str(); }

void scp_string_free(char* s) { std::free(s); }

scp_status scp_instance_parse(const char* text, scp_instance** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new scp_instance{scp::parse_instance(text)};
  });
}

scp_status scp_instance_load(const char* path, scp_instance** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new scp_instance{scp::load_instance(path)};
  });
}

scp_status scp_instance_random(int p, int m_max, double lo, double hi, uint64_t seed, scp_instance** out) {
  return guarded([&] {
    require(out, "out");
    *out = new scp_instance{scp::random_instance(p, m_max, lo, hi, seed)};
  });
}

scp_status scp_instance_serialize(const scp_instance* inst, char** text) {
  return guarded([&] {
    require(inst, "instance");
    require(text, "text");
    *text = duplicate(scp::serialize_instance(inst->value));
  });
}

scp_status scp_instance_save(const scp_instance* inst, const char* path) {
  return guarded([&] {
    require(inst, "instance");
    require(path, "path");
    scp::save_instance(inst->value, path);
  });
}

int scp_instance_blocks(const scp_instance* inst) { return inst ? inst->value.partition.blocks() : 0; }

int scp_instance_rotamers(const scp_instance* inst) { return inst ? inst->value.partition.total() : 0; }

void scp_instance_free(scp_instance* inst) { delete inst; }

scp_status scp_default_params(const scp_instance* inst, scp_params* out) {
  return guarded([&] {
    require(inst, "instance");
    require(out, "out");
    *out = to_c(scp::default_params(inst->value));
  });
}

scp_status scp_solve(const scp_instance* inst, const scp_params* params, int run_dee, scp_report** out) {
  return guarded([&] {
    require(inst, "instance");
    require(out, "out");
    const auto& original = inst->value;
    const scp::SolverParams sp = params ? from_c(*params) : scp::default_params(original);
    sp.validate();

    scp::SolveReport result;
    if (run_dee) {
      const auto reduction = scp::goldstein_reduce(original);
      result = scp::solve(reduction.reduced_instance, sp);
      result.assignment = reduction.expand(result.assignment);
    } else {
      result = scp::solve(original, sp);
    }
    auto doc = scp::make_report(original, sp, result);
    doc.dee = run_dee != 0;
    *out = new scp_report{std::move(doc)};
  });
}

scp_termination scp_report_termination(const scp_report* report) {
  switch (report->doc.termination) {
    case scp::Termination::max_iter: return SCP_TERM_MAX_ITER;
    case scp::Termination::residual: return SCP_TERM_RESIDUAL;
    case scp::Termination::gap_closed: return SCP_TERM_GAP_CLOSED;
  }
  return SCP_TERM_MAX_ITER;
}

double scp_report_lbd(const scp_report* report) { return report->doc.lbd; }

double scp_report_ubd(const scp_report* report) { return report->doc.ubd; }

double scp_report_rel_gap(const scp_report* report) { return report->doc.rel_gap; }

int64_t scp_report_iterations(const scp_report* report) { return report->doc.iter; }

int scp_report_assignment(const scp_report* report, int* choices, int capacity) {
  const auto& a = report->doc.assignment;
  if (choices != nullptr) {
    const int n = std::min(capacity, static_cast<int>(a.size()));
    std::copy_n(a.begin(), std::max(n, 0), choices);
  }
  return static_cast<int>(a.size());
}

scp_status scp_report_serialize(const scp_report* report, int include_timing, char** text) {
  return guarded([&] {
    require(report, "report");
    require(text, "text");
    scp::ReportDocument doc = report->doc;
    if (!include_timing) doc.time_sec = 0.0;
    *text = duplicate(scp::serialize_report(doc));
  });
}

void scp_report_free(scp_report* report) { delete report; }

scp_status scp_oracle(const scp_instance* inst, uint64_t limit, double* optimum, char** text) {
  return guarded([&] {
    require(inst, "instance");
    const auto result = scp::brute_force(inst->value, limit);
    if (optimum) *optimum = result.optimum;
    if (text) {
      nlohmann::ordered_json doc;
      doc["problem"] = inst->value.name;
      doc["optimum"] = result.optimum;
      std::vector<int> one_based;
      for (int c : result.argmin.choice) one_based.push_back(c + 1);
      doc["assignment"] = one_based;
      doc["enumerated"] = result.enumerated;
      *text = duplicate(doc.dump(2) + "\n");
    }
  });
}

scp_status scp_dee(const scp_instance* inst, scp_instance** reduced, char** summary) {
  return guarded([&] {
    require(inst, "instance");
    auto reduction = scp::goldstein_reduce(inst->value);
    if (summary) {
      nlohmann::ordered_json doc;
      doc["problem"] = inst->value.name;
      doc["original_m"] = inst->value.partition.sizes();
      doc["reduced_m"] = reduction.reduced_instance.partition.sizes();
      nlohmann::ordered_json kept = nlohmann::ordered_json::array();
      for (const auto& block : reduction.kept) {
        std::vector<int> one_based;
        for (int k : block) one_based.push_back(k + 1);
        kept.push_back(one_based);
      }
      doc["kept"] = std::move(kept);
      std::vector<int> mapping;
      for (int g : reduction.mapping) mapping.push_back(g + 1);
      doc["mapping"] = mapping;
      *summary = duplicate(doc.dump(2) + "\n");
    }
    if (reduced) *reduced = new scp_instance{std::move(reduction.reduced_instance)};
  });
}

}  // extern "C"
