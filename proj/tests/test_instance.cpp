#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "scpdnn/error.hpp"
#include "scpdnn/instance.hpp"

using namespace scp;

TEST_CASE("canonicalize zeroes within-block off-diagonals") {
  SUBCASE("single block") {
    Matrix raw(2, 2);
    raw << 1, 5, 5, 3;
    auto e = canonicalize(raw, RotamerPartition({2}));
    Matrix expected(2, 2);
    expected << 1, 0, 0, 3;
    CHECK(e.values() == expected);
  }
  SUBCASE("identity unchanged") {
    const Matrix id = Matrix::Identity(5, 5);
    CHECK(canonicalize(id, RotamerPartition({2, 3})).values() == id);
  }
  SUBCASE("constant matrix keeps cross-block entries") {
    const Matrix raw = Matrix::Constant(4, 4, 7.0);
    const auto e = canonicalize(raw, RotamerPartition({2, 2}));
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        const bool same_block = (r / 2 == c / 2);
        const double expected = (same_block && r != c) ? 0.0 : 7.0;
        CHECK(e(r, c) == expected);
      }
    }
  }
}

TEST_CASE("canonicalize errors") {
  CHECK_THROWS_AS(canonicalize(Matrix::Zero(3, 3), RotamerPartition({2, 2})), Error);
  Matrix asym = Matrix::Zero(2, 2);
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(canonicalize(asym, RotamerPartition({1, 1})), Error);
  // Tiny asymmetry is averaged away.
  Matrix near = Matrix::Constant(2, 2, 1.0);
  near(0, 1) += 1e-12;
  const auto e = canonicalize(near, RotamerPartition({1, 1}));
  CHECK(e(0, 1) == e(1, 0));
}

TEST_CASE("canonicalize is idempotent") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto part = testing::random_partition(rng, 5, 4);
    const auto once = canonicalize(testing::random_symmetric(part.total(), rng), part);
    CHECK(canonicalize(once.values(), part) == once);
  }
}

TEST_CASE("objective") {
  const auto inst = testing::small_instance();
  CHECK(objective(Vector::Zero(4), inst.energy) == 0.0);

  Matrix one(1, 1);
  one << -2.5;
  CHECK(objective(Vector::Ones(1), canonicalize(one, RotamerPartition({1}))) == -2.5);

  Vector x(4);
  x << 1, 0, 0, 1;
  CHECK(objective(x, inst.energy) == 6.0);
  CHECK(objective(Assignment{{0, 1}}, inst) == 6.0);
  CHECK_THROWS_AS(objective(Vector::Zero(3), inst.energy), Error);
}

TEST_CASE("pairwise objective agrees with x^T E x") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = random_instance(4, 4, -10, 10, rng());
    std::vector<int> choice;
    for (int m : inst.partition.sizes()) choice.push_back(static_cast<int>(rng() % m));
    const Assignment a{choice};
    const Vector x = to_indicator(a, inst.partition);
    CHECK(objective(a, inst) == doctest::Approx(x.dot(inst.energy.values() * x)).epsilon(1e-12));
  }
}

TEST_CASE("is_feasible") {
  const RotamerPartition part({2, 2});
  Vector x(4);
  x << 1, 0, 0, 1;
  CHECK(is_feasible(x, part));
  x << 1, 1, 0, 1;
  CHECK_FALSE(is_feasible(x, part));
  x << 0, 0, 1, 0;
  CHECK_FALSE(is_feasible(x, part));
  x << 0.5, 0.5, 1, 0;
  CHECK_THROWS_AS(is_feasible(x, part), Error);
}

TEST_CASE("feasible vectors number prod(m_i)") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto part = testing::random_partition(rng, 4, 4);
    if (part.total() > 16) continue;
    std::uint64_t feasible = 0;
    const std::uint64_t all = 1ull << part.total();
    for (std::uint64_t bits = 0; bits < all; ++bits) {
      Vector x(part.total());
      for (int k = 0; k < part.total(); ++k) x(k) = (bits >> k) & 1ull ? 1.0 : 0.0;
      feasible += is_feasible(x, part) ? 1 : 0;
    }
    CHECK(feasible == part.selection_count());
  }
}

TEST_CASE("random_instance") {
  const auto zero = random_instance(1, 1, 0.0, 0.0, 99);
  CHECK(zero.partition.sizes() == std::vector<int>{1});
  CHECK(zero.energy.values() == Matrix::Zero(1, 1));

  CHECK(random_instance(5, 4, -1, 1, 123) == random_instance(5, 4, -1, 1, 123));

  const auto inst = random_instance(3, 4, -10, 10, 42);
  int expected_zeros = 0;
  for (int m : inst.partition.sizes()) expected_zeros += m * (m - 1);
  int zeros = 0;
  const auto& part = inst.partition;
  for (int r = 0; r < part.total(); ++r) {
    for (int c = 0; c < part.total(); ++c) {
      if (r != c && part.block_of(r) == part.block_of(c) && inst.energy(r, c) == 0.0) ++zeros;
    }
  }
  CHECK(zeros == expected_zeros);
  CHECK_THROWS_AS(random_instance(0, 3, 0, 1, 1), Error);
  CHECK_THROWS_AS(random_instance(2, 3, 1, 0, 1), Error);
}

TEST_CASE("instance file round trip and errors") {
  const auto inst = testing::small_instance();
  CHECK(parse_instance(serialize_instance(inst)) == inst);

  const auto noisy = random_instance(4, 5, -10, 10, 5);
  CHECK(parse_instance(serialize_instance(noisy)) == noisy);

  auto parse_error = [](const char* text) {
    try {
      parse_instance(text);
    } catch (const Error& e) {
      return e.code() == ErrorCode::parse;
    }
    return false;
  };
  CHECK(parse_error(R"({"name":"x","p":2,"m":[2,2],"E":[[1,0,0],[0,1,0],[0,0,1]]})"));
  CHECK(parse_error(R"({"name":"x","p":1,"m":[2],"E":[[1,4],[0,1]]})"));
  CHECK(parse_error(R"({"name":"x","p":1,"m":[2],"E":[[1,0],[0]]})"));
  CHECK(parse_error(R"({"name":"x","p":2,"m":[2]})"));
  CHECK(parse_error("not json"));
  CHECK(parse_error(R"({"p":1,"m":[0],"E":[]})"));
}
