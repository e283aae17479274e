#include "scpdnn/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "scpdnn/error.hpp"
#include "scpdnn/projections.hpp"

namespace scp {

void SolverParams::validate() const {
  auto fail = [](const char* what) { throw Error(ErrorCode::invalid_argument, what); };
  if (!(beta >= 1.0) || !std::isfinite(beta)) fail("beta must be >= 1");
  if (!(gamma > 0.0 && gamma < 1.0)) fail("gamma must lie in (0, 1)");
  if (!(epsilon > 0.0)) fail("epsilon must be positive");
  if (max_iter < 1) fail("max_iter must be >= 1");
  if (t_consecutive < 1) fail("t must be >= 1");
  if (bound_period < 1) fail("bound_period must be >= 1");
}

SolverParams default_params(int p, int n0) {
  if (p < 1 || n0 < p) throw Error(ErrorCode::invalid_argument, "need 1 <= p <= n0");
  SolverParams params;
  params.beta = static_cast<double>(std::max(n0 / (2 * p), 1));
  params.gamma = 0.9;
  params.epsilon = 1e-10;
  params.max_iter = static_cast<long>(p) * (n0 + 1) + 10000;
  params.t_consecutive = 100;
  params.bound_period = 100;
  return params;
}

SolverParams default_params(const ScpInstance& instance) {
  return default_params(instance.partition.blocks(), instance.partition.total());
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::max_iter: return "max_iter";
    case Termination::residual: return "residual";
    case Termination::gap_closed: return "gap_closed";
  }
  return "unknown";
}

Termination termination_from_string(std::string_view s) {
  if (s == "max_iter") return Termination::max_iter;
  if (s == "residual") return Termination::residual;
  if (s == "gap_closed") return Termination::gap_closed;
  throw Error(ErrorCode::parse, "unknown termination '" + std::string(s) + "'");
}

SolverState initialize(const ScpInstance& instance, const LiftedGeometry& geometry) {
  const int n = instance.partition.total() + 1;
  SolverState s;
  s.Y = Matrix::Zero(n, n);
  s.Z = Matrix::Zero(n, n);
  // 0.0 - x keeps the fixed entries free of negative zeros.
  for (int i = 1; i < n; ++i) s.Z(i, i) = 0.0 - geometry.Ehat(i, i);
  s.R = Matrix::Zero(geometry.face_order(), geometry.face_order());
  return s;
}

Matrix lift_face(const Matrix& r, const LiftedGeometry& geometry) {
  Matrix vrv = geometry.V * r * geometry.V.transpose();
  return 0.5 * (vrv + vrv.transpose());
}

Matrix r_update(const SolverState& state, const SolverParams& params, const LiftedGeometry& geometry) {
  const Matrix arg = geometry.V.transpose() * (state.Y + state.Z / params.beta) * geometry.V;
  return project_psd_trace(arg, static_cast<double>(geometry.K_rank + 1));
}

Matrix z_half_update(const Matrix& z, const Matrix& y, const Matrix& vrv, const SolverParams& params) {
  return z + (params.gamma * params.beta) * mask_ZA(y - vrv);
}

Matrix y_update(const Matrix& vrv, const Matrix& z, const SolverParams& params, const LiftedGeometry& geometry) {
  return project_box_gangster(vrv - (geometry.Ehat + z) / params.beta, geometry.gangster);
}

bool gap_closed(double best_lbd, double best_ubd) {
  return best_lbd >= best_ubd - 1e-9 * (1.0 + std::abs(best_ubd));
}

std::optional<Termination> check_stop(const SolverState& state, const SolverParams& params) {
  if (!state.bounds.empty()) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (const auto& b : state.bounds) {
      lo = std::max(lo, b.lower);
      hi = std::min(hi, b.upper);
    }
    if (gap_closed(lo, hi)) return Termination::gap_closed;
  }
  if (state.consec_ok >= params.t_consecutive) return Termination::residual;
  if (state.iter >= params.max_iter) return Termination::max_iter;
  return std::nullopt;
}

PrsmSolver::PrsmSolver(const ScpInstance& instance, SolverParams params)
    : instance_(instance),
      params_(params),
      geometry_(LiftedGeometry::build(instance)),
      best_lower_(-std::numeric_limits<double>::infinity()),
      best_upper_(std::numeric_limits<double>::infinity()) {
  params_.validate();
  state_ = initialize(instance_, geometry_);
}

void PrsmSolver::iterate() {
  auto& s = state_;
  s.R = r_update(s, params_, geometry_);
  const Matrix vrv = lift_face(s.R, geometry_);
  s.Z = z_half_update(s.Z, s.Y, vrv, params_);
  Matrix y_next = y_update(vrv, s.Z, params_, geometry_);
  s.Z = z_half_update(s.Z, y_next, vrv, params_);

  s.residuals.primal = (y_next - vrv).norm() / y_next.norm();
  s.residuals.dual = params_.beta * (y_next - s.Y).norm();
  s.Y = std::move(y_next);
  ++s.iter;

  if (std::max(s.residuals.primal, s.residuals.dual) < params_.epsilon) {
    ++s.consec_ok;
  } else {
    s.consec_ok = 0;
  }
}

void PrsmSolver::checkpoint() {
  const int p = instance_.partition.blocks();
  BoundRecord best;
  bool have = false;
  auto consider = [&](UpperSource source) {
    BoundRecord rec = upper_bound(state_.Y, instance_, source);
    if (!have || rec.upper < best.upper) {
      best = std::move(rec);
      have = true;
    }
  };
  if (params_.upper_sources != UpperSourceMode::eig) consider(UpperSource::first_column);
  if (params_.upper_sources != UpperSourceMode::column) consider(UpperSource::dominant_eigenvector);

  best.iteration = state_.iter;
  best.lower = lower_bound(state_.Z, geometry_, p);

  best_lower_ = std::max(best_lower_, best.lower);
  if (best.upper < best_upper_) {
    best_upper_ = best.upper;
    best_assignment_ = best.assignment;
  }
  state_.bounds.push_back(std::move(best));
}

SolveReport PrsmSolver::run(const Observer& observer) {
  const auto start = std::chrono::steady_clock::now();

  std::optional<Termination> stop;
  while (!stop) {
    iterate();
    if (state_.iter % params_.bound_period == 0) {
      checkpoint();
      if (observer) observer(state_, geometry_);
    }
    stop = check_stop(state_, params_);
  }
  // Bounds at the final iterate, unless the loop just took them.
  if (state_.bounds.empty() || state_.bounds.back().iteration != state_.iter) {
    checkpoint();
    if (observer) observer(state_, geometry_);
    if (gap_closed(best_lower_, best_upper_)) stop = Termination::gap_closed;
  }

  SolveReport report;
  report.lbd = best_lower_;
  report.ubd = best_upper_;
  report.rel_gap = relative_gap(best_upper_, best_lower_);
  report.iterations = state_.iter;
  report.assignment = best_assignment_;
  report.termination = *stop;
  report.residuals = state_.residuals;
  report.time_sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SolveReport solve(const ScpInstance& instance, const SolverParams& params) {
  PrsmSolver solver(instance, params);
  return solver.run();
}

SolveReport solve(const ScpInstance& instance) { return solve(instance, default_params(instance)); }

}  // namespace scp
