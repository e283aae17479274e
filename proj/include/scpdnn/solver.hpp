#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "scpdnn/bounds.hpp"
#include "scpdnn/instance.hpp"
#include "scpdnn/lifting.hpp"

namespace scp {

// Which rounding strategies feed the upper bound at each checkpoint.
enum class UpperSourceMode { column, eig, both };

struct SolverParams {
  double beta = 1.0;
  double gamma = 0.9;
  double epsilon = 1e-10;
  long max_iter = 10000;
  long t_consecutive = 100;
  long bound_period = 100;
  UpperSourceMode upper_sources = UpperSourceMode::both;

  // Throws Error(invalid_argument) unless beta >= 1, 0 < gamma < 1,
  // epsilon > 0 and the three counts are >= 1.
  void validate() const;

  bool operator==(const SolverParams&) const = default;
};

// beta = max(floor(n0 / (2p)), 1), gamma = 0.9, epsilon = 1e-10,
// max_iter = p (n0 + 1) + 10^4, t = 100, bounds every 100 iterations.
SolverParams default_params(const ScpInstance& instance);
SolverParams default_params(int p, int n0);

enum class Termination { max_iter, residual, gap_closed };

std::string_view to_string(Termination t);
Termination termination_from_string(std::string_view s);

struct Residuals {
  double primal = 0.0;  // ||Y - V R V^T||_F / ||Y||_F
  double dual = 0.0;    // beta ||Y^k - Y^{k-1}||_F
};

struct SolverState {
  Matrix R;
  Matrix Y;
  Matrix Z;
  long iter = 0;
  long consec_ok = 0;
  Residuals residuals;
  std::vector<BoundRecord> bounds;
};

struct SolveReport {
  double lbd = 0.0;
  double ubd = 0.0;
  double rel_gap = 0.0;
  long iterations = 0;
  double time_sec = 0.0;
  Assignment assignment;
  Termination termination = Termination::max_iter;
  Residuals residuals;
};

// Y = 0, Z = 0 except Z(i,i) = -Ehat(i,i) for i >= 1, R empty, counters zero.
SolverState initialize(const ScpInstance& instance, const LiftedGeometry& geometry);

// V R V^T, symmetrized.
Matrix lift_face(const Matrix& r, const LiftedGeometry& geometry);

// P_R(V^T (Y + Z / beta) V) with trace p + 1.
Matrix r_update(const SolverState& state, const SolverParams& params, const LiftedGeometry& geometry);

// Z + gamma beta mask(Y - VRV^T). Used for both half steps.
Matrix z_half_update(const Matrix& z, const Matrix& y, const Matrix& vrv, const SolverParams& params);

// Box-with-gangster projection of VRV^T - (Ehat + Z) / beta.
Matrix y_update(const Matrix& vrv, const Matrix& z, const SolverParams& params, const LiftedGeometry& geometry);

// Gap test used for early termination: best_lbd >= best_ubd - 1e-9 (1 + |best_ubd|).
bool gap_closed(double best_lbd, double best_ubd);

// Termination decision after a completed iteration, or nullopt to continue.
// Priority: gap_closed, then residual (consec_ok >= t), then max_iter.
std::optional<Termination> check_stop(const SolverState& state, const SolverParams& params);

/// Runs the splitting iteration on one instance. The solver owns its state;
/// the instance must outlive it.
class PrsmSolver {
 public:
  // Called after every bound checkpoint with the current iterates.
  using Observer = std::function<void(const SolverState&, const LiftedGeometry&)>;

  PrsmSolver(const ScpInstance& instance, SolverParams params);

  // One full iteration: R, Z half step, Y, Z full step, residuals.
  void iterate();

  // Evaluates lower and upper bounds at the current iterate and records them.
  void checkpoint();

  SolveReport run(const Observer& observer = {});

  const SolverState& state() const { return state_; }
  const LiftedGeometry& geometry() const { return geometry_; }
  const SolverParams& params() const { return params_; }

  double best_lower() const { return best_lower_; }
  double best_upper() const { return best_upper_; }
  const Assignment& best_assignment() const { return best_assignment_; }

 private:
  const ScpInstance& instance_;
  SolverParams params_;
  LiftedGeometry geometry_;
  SolverState state_;
  double best_lower_;
  double best_upper_;
  Assignment best_assignment_;
};

SolveReport solve(const ScpInstance& instance, const SolverParams& params);
SolveReport solve(const ScpInstance& instance);

}  // namespace scp
