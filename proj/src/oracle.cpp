#include "scpdnn/oracle.hpp"

#include <algorithm>
#include <limits>

#include "scpdnn/error.hpp"

namespace scp {

OracleResult brute_force(const ScpInstance& instance, std::uint64_t limit) {
  const auto& part = instance.partition;
  const std::uint64_t count = part.selection_count();
  if (count > limit) {
    throw Error(ErrorCode::too_large, "instance has " + std::to_string(count) +
                                          " selections, above the enumeration limit " +
                                          std::to_string(limit));
  }

  const int p = part.blocks();
  const auto& e = instance.energy;
  std::vector<int> choice(p, 0);
  std::vector<int> rot(p);

  OracleResult best;
  best.optimum = std::numeric_limits<double>::infinity();
  for (std::uint64_t visited = 0; visited < count; ++visited) {
    for (int b = 0; b < p; ++b) rot[b] = part.offset(b) + choice[b];
    double value = 0.0;
    for (int i = 0; i < p; ++i) {
      value += e(rot[i], rot[i]);
      for (int j = i + 1; j < p; ++j) value += 2.0 * e(rot[i], rot[j]);
    }
    if (value < best.optimum) {
      best.optimum = value;
      best.argmin.choice = choice;
    }
    // Odometer with the last block fastest gives lexicographic order.
    for (int b = p - 1; b >= 0; --b) {
      if (++choice[b] < part.size(b)) break;
      choice[b] = 0;
    }
  }
  best.enumerated = count;
  return best;
}

Assignment DeeReduction::expand(const Assignment& reduced) const {
  if (reduced.choice.size() != kept.size()) {
    throw Error(ErrorCode::invalid_argument, "assignment does not match the reduction");
  }
  Assignment out;
  out.choice.resize(kept.size());
  for (std::size_t b = 0; b < kept.size(); ++b) out.choice[b] = kept[b].at(reduced.choice[b]);
  return out;
}

DeeReduction goldstein_reduce(const ScpInstance& instance) {
  const auto& part = instance.partition;
  const int p = part.blocks();
  const Matrix& e = instance.energy.values();

  std::vector<std::vector<int>> alive(p);  // global rotamer indices
  for (int b = 0; b < p; ++b) {
    for (int k = 0; k < part.size(b); ++k) alive[b].push_back(part.offset(b) + k);
  }

  auto score = [&](int block, int r, int t) {
    double s = e(r, r) - e(t, t);
    for (int j = 0; j < p; ++j) {
      if (j == block) continue;
      double worst = std::numeric_limits<double>::infinity();
      for (int u : alive[j]) worst = std::min(worst, 2.0 * (e(r, u) - e(t, u)));
      s += worst;
    }
    return s;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (int b = 0; b < p; ++b) {
      auto& set = alive[b];
      for (std::size_t idx = 0; idx < set.size();) {
        const int r = set[idx];
        const bool dead = std::any_of(set.begin(), set.end(),
                                      [&](int t) { return t != r && score(b, r, t) > 0.0; });
        if (dead) {
          set.erase(set.begin() + static_cast<std::ptrdiff_t>(idx));
          changed = true;
        } else {
          ++idx;
        }
      }
    }
  }

  std::vector<int> sizes;
  std::vector<int> mapping;
  std::vector<std::vector<int>> kept(p);
  for (int b = 0; b < p; ++b) {
    sizes.push_back(static_cast<int>(alive[b].size()));
    for (int g : alive[b]) {
      kept[b].push_back(g - part.offset(b));
      mapping.push_back(g);
    }
  }
  const int n = static_cast<int>(mapping.size());
  Matrix sub(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) sub(r, c) = e(mapping[r], mapping[c]);
  }
  RotamerPartition reduced_part(std::move(sizes));
  auto energy = canonicalize(sub, reduced_part);
  return DeeReduction{std::move(kept), ScpInstance(std::move(reduced_part), std::move(energy), instance.name),
                      std::move(mapping)};
}

}  // namespace scp
