#pragma once

#include <cstdint>
#include <vector>

#include "scpdnn/instance.hpp"

namespace scp {

inline constexpr std::uint64_t kDefaultOracleLimit = 1'000'000;

struct OracleResult {
  double optimum = 0.0;
  Assignment argmin;
  std::uint64_t enumerated = 0;
};

// Exhaustive minimum of x^T E x over all selections, visited in lexicographic
// order; the first minimizer wins ties. Throws Error(too_large) when the
// number of selections exceeds `limit`.
OracleResult brute_force(const ScpInstance& instance, std::uint64_t limit = kDefaultOracleLimit);

struct DeeReduction {
  // Surviving 0-based local rotamer indices, per block.
  std::vector<std::vector<int>> kept;
  ScpInstance reduced_instance;
  // Reduced 0-based rotamer index -> original 0-based rotamer index.
  std::vector<int> mapping;

  // Lifts a selection on the reduced instance back to the original blocks.
  Assignment expand(const Assignment& reduced) const;
};

/// Goldstein dead-end elimination. Rotamer r of block i is dropped when some
/// surviving t in block i satisfies
///   (E_rr - E_tt) + sum_{j != i} min_{s alive in j} 2 (E_rs - E_ts) > 0,
/// scanning blocks then rotamers in ascending order and repeating until a
/// full pass removes nothing. The factor 2 matches x^T E x, which counts each
/// cross pair twice.
DeeReduction goldstein_reduce(const ScpInstance& instance);

}  // namespace scp
