#pragma once

#include <span>

#include "scpdnn/instance.hpp"
#include "scpdnn/lifting.hpp"

namespace scp {

enum class UpperSource { first_column, dominant_eigenvector };

struct BoundRecord {
  long iteration = 0;
  double lower = 0.0;
  double upper = 0.0;
  UpperSource upper_source = UpperSource::first_column;
  Assignment assignment;
};

// min over Y in the box-with-gangster set of <W, Y>, in closed form:
// W(0,0) plus the negative parts of W off the gangster set.
double min_linear_over_box(const Matrix& w, std::span<const IndexPair> gangster);

/// Lagrangian dual value
///   g(Z) = min_{Y} <Ehat + Z, Y> - (p+1) * lambda_max(V^T Z V),
/// a lower bound on the relaxation and hence on every feasible energy.
double lower_bound(const Matrix& z, const LiftedGeometry& geometry, int p);

// Fractional selection vector in [0,1]^n0 read off a lifted matrix: either
// column 0 or the scaled dominant eigenvector (sqrt(lambda_max) * v, sign
// chosen so the entries sum to >= 0). Both return x exactly for Y = [1;x][1;x]^T.
Vector extract_approx(const Matrix& y, UpperSource source);

// Blockwise argmax; ties go to the lowest index.
Assignment round_to_feasible(const Vector& x_approx, const RotamerPartition& partition);

// extract_approx -> round_to_feasible -> objective. `lower` and `iteration`
// are left for the caller.
BoundRecord upper_bound(const Matrix& y, const ScpInstance& instance, UpperSource source);

// 2|u - l| / |u + l + 1|.
double relative_gap(double ubd, double lbd);

}  // namespace scp
