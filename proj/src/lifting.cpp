#include "scpdnn/lifting.hpp"

#include <algorithm>

#include "scpdnn/error.hpp"

namespace scp {

Matrix build_A(const RotamerPartition& partition) {
  Matrix a = Matrix::Zero(partition.blocks(), partition.total());
  for (int b = 0; b < partition.blocks(); ++b) {
    a.block(b, partition.offset(b), 1, partition.size(b)).setOnes();
  }
  return a;
}

Matrix lifted_constraint(const RotamerPartition& partition) {
  Matrix b(partition.blocks(), partition.total() + 1);
  b.col(0).setConstant(-1.0);
  b.rightCols(partition.total()) = build_A(partition);
  return b;
}

Matrix build_V(const RotamerPartition& partition) {
  const int n = partition.total() + 1;
  const int p = partition.blocks();
  const Matrix bt = lifted_constraint(partition).transpose();
  Eigen::HouseholderQR<Matrix> qr(bt);
  const Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  return q.rightCols(n - p);
}

Matrix build_K(const RotamerPartition& partition) {
  const Matrix b = lifted_constraint(partition);
  return b.transpose() * b;
}

std::vector<IndexPair> gangster_indices(const RotamerPartition& partition) {
  std::vector<IndexPair> out;
  out.push_back({0, 0});
  for (int b = 0; b < partition.blocks(); ++b) {
    const int first = partition.offset(b) + 1;
    const int m = partition.size(b);
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) {
        if (r != c) out.push_back({first + r, first + c});
      }
    }
  }
  // Blocks are contiguous and ascending, so this is already row-major.
  return out;
}

Matrix build_Ehat(const EnergyMatrix& energy) {
  const int n0 = energy.order();
  Matrix ehat = Matrix::Zero(n0 + 1, n0 + 1);
  ehat.bottomRightCorner(n0, n0) = energy.values();
  return ehat;
}

Vector gangster_apply(const Matrix& m, std::span<const IndexPair> gangster) {
  Vector out(static_cast<Eigen::Index>(gangster.size()));
  for (std::size_t k = 0; k < gangster.size(); ++k) {
    const auto [r, c] = gangster[k];
    if (r < 0 || c < 0 || r >= m.rows() || c >= m.cols()) {
      throw Error(ErrorCode::invalid_argument, "gangster index outside matrix");
    }
    out(static_cast<Eigen::Index>(k)) = m(r, c);
  }
  return out;
}

LiftedGeometry LiftedGeometry::build(const ScpInstance& instance) {
  const auto& part = instance.partition;
  LiftedGeometry g;
  g.A = build_A(part);
  g.Ehat = build_Ehat(instance.energy);
  g.gangster = gangster_indices(part);
  g.V = build_V(part);
  g.K_rank = part.blocks();
  return g;
}

}  // namespace scp
