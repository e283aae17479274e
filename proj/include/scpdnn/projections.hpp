#pragma once

#include <span>

#include "scpdnn/instance.hpp"
#include "scpdnn/lifting.hpp"

namespace scp {

// Euclidean projection onto {x >= 0, sum(x) = total}. Sort-and-threshold,
// O(n log n). Requires total > 0.
Vector project_simplex(const Vector& d, double total);

// Projection onto {R PSD, tr(R) = total}: eigendecompose the symmetrized
// input and project its eigenvalues onto the scaled simplex.
Matrix project_psd_trace(const Matrix& m, double total);

// Projection onto {0 <= Y <= 1, Y = 1 at (0,0), Y = 0 on the rest of the
// gangster set}. The input is symmetrized first.
Matrix project_box_gangster(const Matrix& m, std::span<const IndexPair> gangster);

// Zeroes row 0, column 0 and the diagonal. Applied to the primal residual
// before it enters the dual update, so the entries of Z fixed by the known
// optimal dual structure never move.
Matrix mask_ZA(const Matrix& m);

}  // namespace scp
