#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "scpdnn/error.hpp"
#include "scpdnn/oracle.hpp"

using namespace scp;

namespace {

// Rotamer 0 of every block has zero energies; every other rotamer costs 10
// on the diagonal and against everything in other blocks.
ScpInstance dominated_instance(const std::vector<int>& sizes) {
  RotamerPartition part(sizes);
  const int n = part.total();
  Matrix e = Matrix::Zero(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const bool r_first = r == part.offset(part.block_of(r));
      const bool c_first = c == part.offset(part.block_of(c));
      if (!(r_first && c_first)) e(r, c) = 10.0;
    }
  }
  auto energy = canonicalize(e, part);
  return ScpInstance(std::move(part), std::move(energy), "dominated");
}

}  // namespace

TEST_CASE("brute_force") {
  const auto small = brute_force(testing::small_instance());
  CHECK(small.optimum == 6.0);
  CHECK(small.argmin.choice == std::vector<int>{0, 1});
  CHECK(small.enumerated == 4);

  Matrix d(3, 3);
  d << 5, 0, 0, 0, 2, 0, 0, 0, 9;
  const RotamerPartition one({3});
  const auto diag = brute_force(ScpInstance(one, canonicalize(d, one)));
  CHECK(diag.optimum == 2.0);
  CHECK(diag.argmin.choice == std::vector<int>{1});

  const auto zero = brute_force(random_instance(4, 3, 0.0, 0.0, 2));
  CHECK(zero.optimum == 0.0);
  CHECK(zero.argmin.choice == std::vector<int>(4, 0));

  const auto big = random_instance(12, 5, -1, 1, 3);
  try {
    brute_force(big, 1000);
    FAIL("expected a size error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::too_large);
  }
}

TEST_CASE("brute_force agrees with independent enumeration") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = random_instance(1 + static_cast<int>(rng() % 5), 5, -10, 10, rng());
    const auto res = brute_force(inst);
    CHECK(res.optimum == doctest::Approx(testing::enumerate_optimum(inst)).epsilon(1e-12));
    CHECK(res.optimum == objective(res.argmin, inst));
    CHECK(res.enumerated == inst.partition.selection_count());
  }
}

TEST_CASE("goldstein_reduce") {
  const auto dom = goldstein_reduce(dominated_instance({3, 2, 4}));
  CHECK(dom.reduced_instance.partition.sizes() == std::vector<int>{1, 1, 1});
  CHECK(dom.kept == std::vector<std::vector<int>>{{0}, {0}, {0}});
  CHECK(dom.mapping == std::vector<int>{0, 3, 5});

  const auto singles = random_instance(4, 1, -5, 5, 9);
  const auto id = goldstein_reduce(singles);
  CHECK(id.reduced_instance == singles);
  CHECK(id.mapping == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("goldstein_reduce is safe and idempotent") {
  std::mt19937_64 rng(52);
  int removed = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = random_instance(2 + static_cast<int>(rng() % 5), 5, -10, 10, rng());
    const auto red = goldstein_reduce(inst);
    removed += inst.partition.total() - red.reduced_instance.partition.total();
    for (int m : red.reduced_instance.partition.sizes()) CHECK(m >= 1);
    const auto before = brute_force(inst);
    const auto after = brute_force(red.reduced_instance);
    CHECK(before.optimum == after.optimum);
    CHECK(objective(red.expand(after.argmin), inst) == before.optimum);
    // Restriction of the original matrix.
    for (std::size_t r = 0; r < red.mapping.size(); ++r) {
      for (std::size_t c = 0; c < red.mapping.size(); ++c) {
        CHECK(red.reduced_instance.energy(static_cast<int>(r), static_cast<int>(c)) ==
              inst.energy(red.mapping[r], red.mapping[c]));
      }
    }
    const auto again = goldstein_reduce(red.reduced_instance);
    CHECK(again.reduced_instance == red.reduced_instance);
  }
  CHECK(removed > 0);
}
