#include "scpdnn/projections.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "scpdnn/error.hpp"

namespace scp {

Vector project_simplex(const Vector& d, double total) {
  if (!(total > 0.0)) throw Error(ErrorCode::invalid_argument, "simplex total must be positive");
  if (d.size() == 0) throw Error(ErrorCode::invalid_argument, "cannot project an empty vector");

  std::vector<double> u(d.data(), d.data() + d.size());
  std::sort(u.begin(), u.end(), std::greater<>());

  // Largest k with u_k > (sum_{j<=k} u_j - total) / k.
  double running = 0.0;
  double theta = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    running += u[k];
    const double candidate = (running - total) / static_cast<double>(k + 1);
    if (u[k] > candidate) theta = candidate;
  }
  return (d.array() - theta).cwiseMax(0.0).matrix();
}

Matrix project_psd_trace(const Matrix& m, double total) {
  const Matrix sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sym);
  if (eig.info() != Eigen::Success) {
    throw Error(ErrorCode::numerical, "eigendecomposition failed in PSD projection");
  }
  const Vector lambda = project_simplex(eig.eigenvalues(), total);
  const Matrix& u = eig.eigenvectors();
  Matrix out = u * lambda.asDiagonal() * u.transpose();
  return 0.5 * (out + out.transpose());
}

Matrix project_box_gangster(const Matrix& m, std::span<const IndexPair> gangster) {
  Matrix out = (0.5 * (m + m.transpose())).cwiseMax(0.0).cwiseMin(1.0);
  for (const auto& [r, c] : gangster) out(r, c) = 0.0;
  out(0, 0) = 1.0;
  return out;
}

Matrix mask_ZA(const Matrix& m) {
  Matrix out = m;
  out.row(0).setZero();
  out.col(0).setZero();
  out.diagonal().setZero();
  return out;
}

}  // namespace scp
