#pragma once

#include <compare>
#include <span>
#include <vector>

#include "scpdnn/instance.hpp"

namespace scp {

/// Entry (row, col) of a lifted (n0+1)x(n0+1) matrix. Index 0 is the
/// homogenizing coordinate; rotamer k sits at lifted index k+1.
struct IndexPair {
  int row = 0;
  int col = 0;

  auto operator<=>(const IndexPair&) const = default;
};

// p x n0 block row-sum matrix: row i has ones on block i's columns.
Matrix build_A(const RotamerPartition& partition);

// [-e_p, A], the p x (n0+1) matrix whose null space is the minimal face.
Matrix lifted_constraint(const RotamerPartition& partition);

// Orthonormal basis of Null([-e_p, A]), shape (n0+1) x (n0+1-p). Taken from
// the trailing columns of the unpivoted Householder QR of [-e_p, A]^T, so the
// result is a deterministic function of the partition.
Matrix build_V(const RotamerPartition& partition);

// Exposing matrix K = [-e_p, A]^T [-e_p, A]. Only used for checks; the
// solver never forms it.
Matrix build_K(const RotamerPartition& partition);

// {(0,0)} plus every ordered off-diagonal pair inside a block, in lifted
// indices, sorted row-major. This is the support of blkdiag(1, A^T A - I).
std::vector<IndexPair> gangster_indices(const RotamerPartition& partition);

// blkdiag(0, E).
Matrix build_Ehat(const EnergyMatrix& energy);

// Entries of `m` at `gangster`, in the list's order.
Vector gangster_apply(const Matrix& m, std::span<const IndexPair> gangster);

/// Everything the splitting iteration needs about one instance.
struct LiftedGeometry {
  static LiftedGeometry build(const ScpInstance& instance);

  Matrix A;
  Matrix Ehat;
  std::vector<IndexPair> gangster;
  Matrix V;
  int K_rank = 0;

  int lifted_order() const { return static_cast<int>(Ehat.rows()); }
  int face_order() const { return static_cast<int>(V.cols()); }
};

}  // namespace scp
