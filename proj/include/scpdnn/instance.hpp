#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace scp {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Relative tolerance accepted on the symmetry of raw energy matrices.
inline constexpr double kSymmetryTolerance = 1e-8;

/// The rotamer sets V_1..V_p. Block i owns rotamers
/// [offset(i), offset(i) + size(i)) in 0-based rotamer numbering.
class RotamerPartition {
 public:
  explicit RotamerPartition(std::vector<int> sizes);

  int blocks() const { return static_cast<int>(sizes_.size()); }
  int size(int block) const { return sizes_[block]; }
  int offset(int block) const { return offsets_[block]; }
  int total() const { return total_; }
  const std::vector<int>& sizes() const { return sizes_; }
  const std::vector<int>& offsets() const { return offsets_; }

  // Block owning a 0-based rotamer index.
  int block_of(int rotamer) const;

  // Number of feasible selections, saturating at UINT64_MAX.
  std::uint64_t selection_count() const;

  bool operator==(const RotamerPartition&) const = default;

 private:
  std::vector<int> sizes_;
  std::vector<int> offsets_;
  int total_ = 0;
};

/// Symmetric self/pair energy matrix with zeroed within-block off-diagonals.
/// Only `canonicalize` produces one, so holders may rely on exact symmetry.
class EnergyMatrix {
 public:
  const Matrix& values() const { return values_; }
  int order() const { return static_cast<int>(values_.rows()); }
  double operator()(int r, int c) const { return values_(r, c); }

  bool operator==(const EnergyMatrix& other) const {
    return values_.rows() == other.values_.rows() && values_ == other.values_;
  }

 private:
  explicit EnergyMatrix(Matrix values) : values_(std::move(values)) {}
  friend EnergyMatrix canonicalize(const Matrix& raw, const RotamerPartition& partition);

  Matrix values_;
};

// Averages `raw` with its transpose and zeroes the within-block
// off-diagonals. Throws on dimension mismatch or asymmetry above
// kSymmetryTolerance (relative to the largest entry magnitude).
EnergyMatrix canonicalize(const Matrix& raw, const RotamerPartition& partition);

/// One rotamer per block, stored as 0-based local indices.
struct Assignment {
  std::vector<int> choice;

  bool operator==(const Assignment&) const = default;
};

Vector to_indicator(const Assignment& assignment, const RotamerPartition& partition);

struct ScpInstance {
  ScpInstance(RotamerPartition partition, EnergyMatrix energy, std::string name = {});

  RotamerPartition partition;
  EnergyMatrix energy;
  std::string name;

  bool operator==(const ScpInstance&) const = default;
};

// x^T E x. Throws on length mismatch.
double objective(const Vector& x, const EnergyMatrix& energy);
// Same value evaluated pairwise over the chosen rotamers.
double objective(const Assignment& assignment, const ScpInstance& instance);

// True iff every block of the 0/1 vector `x` sums to exactly one. Throws on
// length mismatch or non-binary entries.
bool is_feasible(const Vector& x, const RotamerPartition& partition);

// Block sizes uniform in 1..m_max, energies i.i.d. uniform on [lo, hi]
// (upper triangle mirrored), then canonicalized. Deterministic in `seed`.
ScpInstance random_instance(int p, int m_max, double lo, double hi, std::uint64_t seed);

ScpInstance parse_instance(std::string_view text);
std::string serialize_instance(const ScpInstance& instance);

ScpInstance load_instance(const std::string& path);
void save_instance(const ScpInstance& instance, const std::string& path);

}  // namespace scp
