#include "scpdnn/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "scpdnn/error.hpp"

namespace scp {

double min_linear_over_box(const Matrix& w, std::span<const IndexPair> gangster) {
  const Eigen::Index n = w.rows();
  // Gangster entries other than (0,0) are pinned to 0 and contribute nothing.
  std::vector<char> pinned(static_cast<std::size_t>(n * n), 0);
  for (const auto& [r, c] : gangster) pinned[static_cast<std::size_t>(r * n + c)] = 1;

  double total = w(0, 0);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      if (pinned[static_cast<std::size_t>(r * n + c)]) continue;
      total += std::min(0.0, w(r, c));
    }
  }
  return total;
}

double lower_bound(const Matrix& z, const LiftedGeometry& geometry, int p) {
  const Matrix zs = 0.5 * (z + z.transpose());
  const double inner = min_linear_over_box(geometry.Ehat + zs, geometry.gangster);

  Matrix face = geometry.V.transpose() * zs * geometry.V;
  face = 0.5 * (face + face.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(face, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) {
    throw Error(ErrorCode::numerical, "eigendecomposition failed in lower bound");
  }
  return inner - static_cast<double>(p + 1) * eig.eigenvalues().maxCoeff();
}

Vector extract_approx(const Matrix& y, UpperSource source) {
  const Eigen::Index n0 = y.rows() - 1;
  if (n0 < 1 || y.cols() != y.rows()) throw Error(ErrorCode::invalid_argument, "lifted matrix has bad shape");

  Vector x;
  if (source == UpperSource::first_column) {
    x = y.col(0).tail(n0);
  } else {
    const Matrix sym = 0.5 * (y + y.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> eig(sym);
    if (eig.info() != Eigen::Success) {
      throw Error(ErrorCode::numerical, "eigendecomposition failed in rounding");
    }
    // Eigen sorts eigenvalues ascending.
    const double lambda = std::max(0.0, eig.eigenvalues()(n0));
    Vector v = eig.eigenvectors().col(n0);
    if (v.sum() < 0.0) v = -v;
    x = std::sqrt(lambda) * v.tail(n0);
  }
  return x.cwiseMax(0.0).cwiseMin(1.0);
}

Assignment round_to_feasible(const Vector& x_approx, const RotamerPartition& partition) {
  if (x_approx.size() != partition.total()) {
    throw Error(ErrorCode::invalid_argument, "approximate vector length differs from rotamer count");
  }
  Assignment out;
  out.choice.resize(partition.blocks());
  for (int b = 0; b < partition.blocks(); ++b) {
    const int off = partition.offset(b);
    int best = 0;
    for (int k = 1; k < partition.size(b); ++k) {
      if (x_approx(off + k) > x_approx(off + best)) best = k;
    }
    out.choice[b] = best;
  }
  return out;
}

BoundRecord upper_bound(const Matrix& y, const ScpInstance& instance, UpperSource source) {
  BoundRecord rec;
  rec.upper_source = source;
  rec.assignment = round_to_feasible(extract_approx(y, source), instance.partition);
  rec.upper = objective(rec.assignment, instance);
  return rec;
}

double relative_gap(double ubd, double lbd) {
  return 2.0 * std::abs(ubd - lbd) / std::abs(ubd + lbd + 1.0);
}

}  // namespace scp
