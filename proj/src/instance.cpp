#include "scpdnn/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "json.hpp"

#include "scpdnn/error.hpp"

namespace scp {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::invalid_argument, what); }
[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::parse, what); }

}  // namespace

RotamerPartition::RotamerPartition(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) invalid("partition needs at least one block");
  offsets_.reserve(sizes_.size());
  for (int m : sizes_) {
    if (m < 1) invalid("block sizes must be positive");
    offsets_.push_back(total_);
    total_ += m;
  }
}

int RotamerPartition::block_of(int rotamer) const {
  if (rotamer < 0 || rotamer >= total_) invalid("rotamer index out of range");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), rotamer);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

std::uint64_t RotamerPartition::selection_count() const {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  for (int m : sizes_) {
    if (count > kMax / static_cast<std::uint64_t>(m)) return kMax;
    count *= static_cast<std::uint64_t>(m);
  }
  return count;
}

EnergyMatrix canonicalize(const Matrix& raw, const RotamerPartition& partition) {
  const int n0 = partition.total();
  if (raw.rows() != n0 || raw.cols() != n0) {
    invalid("energy matrix must be " + std::to_string(n0) + "x" + std::to_string(n0));
  }
  if (!raw.allFinite()) invalid("energy matrix has non-finite entries");
  const double scale = std::max(1.0, raw.cwiseAbs().maxCoeff());
  const double asym = (raw - raw.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTolerance * scale) invalid("energy matrix is not symmetric");

  Matrix sym = 0.5 * (raw + raw.transpose());
  for (int b = 0; b < partition.blocks(); ++b) {
    const int off = partition.offset(b);
    for (int r = 0; r < partition.size(b); ++r) {
      for (int c = 0; c < partition.size(b); ++c) {
        if (r != c) sym(off + r, off + c) = 0.0;
      }
    }
  }
  return EnergyMatrix(std::move(sym));
}

Vector to_indicator(const Assignment& assignment, const RotamerPartition& partition) {
  if (static_cast<int>(assignment.choice.size()) != partition.blocks()) {
    invalid("assignment length differs from block count");
  }
  Vector x = Vector::Zero(partition.total());
  for (int b = 0; b < partition.blocks(); ++b) {
    const int c = assignment.choice[b];
    if (c < 0 || c >= partition.size(b)) invalid("assignment choice out of range");
    x(partition.offset(b) + c) = 1.0;
  }
  return x;
}

ScpInstance::ScpInstance(RotamerPartition partition_, EnergyMatrix energy_, std::string name_)
    : partition(std::move(partition_)), energy(std::move(energy_)), name(std::move(name_)) {
  if (energy.order() != partition.total()) invalid("energy order differs from rotamer count");
}

double objective(const Vector& x, const EnergyMatrix& energy) {
  if (x.size() != energy.order()) invalid("indicator length differs from energy order");
  return x.dot(energy.values() * x);
}

double objective(const Assignment& assignment, const ScpInstance& instance) {
  const auto& part = instance.partition;
  if (static_cast<int>(assignment.choice.size()) != part.blocks()) {
    invalid("assignment length differs from block count");
  }
  std::vector<int> picked(part.blocks());
  for (int b = 0; b < part.blocks(); ++b) {
    const int c = assignment.choice[b];
    if (c < 0 || c >= part.size(b)) invalid("assignment choice out of range");
    picked[b] = part.offset(b) + c;
  }
  const auto& e = instance.energy;
  double total = 0.0;
  for (std::size_t i = 0; i < picked.size(); ++i) {
    total += e(picked[i], picked[i]);
    for (std::size_t j = i + 1; j < picked.size(); ++j) total += 2.0 * e(picked[i], picked[j]);
  }
  return total;
}

bool is_feasible(const Vector& x, const RotamerPartition& partition) {
  if (x.size() != partition.total()) invalid("indicator length differs from rotamer count");
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    if (x(k) != 0.0 && x(k) != 1.0) invalid("indicator entries must be 0 or 1");
  }
  for (int b = 0; b < partition.blocks(); ++b) {
    if (x.segment(partition.offset(b), partition.size(b)).sum() != 1.0) return false;
  }
  return true;
}

ScpInstance random_instance(int p, int m_max, double lo, double hi, std::uint64_t seed) {
  if (p < 1 || m_max < 1) invalid("random_instance needs p >= 1 and m_max >= 1");
  if (!(lo <= hi)) invalid("energy interval is empty");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size_dist(1, m_max);
  std::vector<int> sizes(p);
  for (int& m : sizes) m = size_dist(rng);
  RotamerPartition partition(std::move(sizes));

  const int n0 = partition.total();
  std::uniform_real_distribution<double> energy_dist(lo, hi);
  Matrix raw(n0, n0);
  for (int r = 0; r < n0; ++r) {
    for (int c = r; c < n0; ++c) {
      const double v = lo == hi ? lo : energy_dist(rng);
      raw(r, c) = v;
      raw(c, r) = v;
    }
  }
  auto energy = canonicalize(raw, partition);
  return ScpInstance(std::move(partition), std::move(energy), "random-" + std::to_string(seed));
}

ScpInstance parse_instance(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("instance must be a JSON object");
  for (const char* key : {"p", "m", "E"}) {
    if (!doc.contains(key)) malformed(std::string("instance lacks field '") + key + "'");
  }
  try {
    const std::string name = doc.value("name", std::string{});
    const int p = doc.at("p").get<int>();
    auto sizes = doc.at("m").get<std::vector<int>>();
    if (static_cast<int>(sizes.size()) != p) malformed("length of 'm' differs from 'p'");
    for (int m : sizes) {
      if (m < 1) malformed("entries of 'm' must be positive");
    }
    RotamerPartition partition(std::move(sizes));

    const auto& rows = doc.at("E");
    const int n0 = partition.total();
    if (!rows.is_array() || static_cast<int>(rows.size()) != n0) {
      malformed("'E' must have n0 = sum(m) = " + std::to_string(n0) + " rows");
    }
    Matrix raw(n0, n0);
    for (int r = 0; r < n0; ++r) {
      const auto& row = rows[r];
      if (!row.is_array() || static_cast<int>(row.size()) != n0) malformed("'E' is not square");
      for (int c = 0; c < n0; ++c) raw(r, c) = row[c].get<double>();
    }
    auto energy = canonicalize(raw, partition);
    return ScpInstance(std::move(partition), std::move(energy), name);
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("instance has a field of the wrong type: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::parse) throw;
    malformed(e.what());
  }
}

std::string serialize_instance(const ScpInstance& instance) {
  const auto& part = instance.partition;
  const auto& e = instance.energy.values();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int r = 0; r < e.rows(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int c = 0; c < e.cols(); ++c) row.push_back(e(r, c));
    rows.push_back(std::move(row));
  }
  nlohmann::ordered_json doc;
  doc["name"] = instance.name;
  doc["p"] = part.blocks();
  doc["m"] = part.sizes();
  doc["E"] = std::move(rows);
  return doc.dump() + "\n";
}

ScpInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void save_instance(const ScpInstance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io, "cannot write instance file '" + path + "'");
  out << serialize_instance(instance);
  if (!out) throw Error(ErrorCode::io, "write failed for '" + path + "'");
}

}  // namespace scp
