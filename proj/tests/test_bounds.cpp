#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "scpdnn/bounds.hpp"
#include "scpdnn/oracle.hpp"
#include "scpdnn/solver.hpp"

using namespace scp;

TEST_CASE("lower_bound at Z = 0 with nonnegative energies") {
  const RotamerPartition part({2, 3});
  Matrix e = Matrix::Constant(5, 5, 2.0);
  const ScpInstance inst(part, canonicalize(e, part));
  const auto geo = LiftedGeometry::build(inst);
  CHECK(std::abs(lower_bound(Matrix::Zero(6, 6), geo, 2)) <= 1e-14);
}

TEST_CASE("lower_bound on the small instance at the initial dual") {
  const auto inst = testing::small_instance();
  const auto geo = LiftedGeometry::build(inst);
  const Matrix z0 = initialize(inst, geo).Z;
  // Reference value from an independent null-space basis (SciPy) and
  // eigensolver: 0 - 3 * lambda_max(V^T Z0 V).
  const double g = lower_bound(z0, geo, 2);
  CHECK(g == doctest::Approx(1.866972478892482).epsilon(1e-12));
  CHECK(g <= 6.0);
}

TEST_CASE("closed-form inner minimum matches the explicit minimizer") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto part = testing::random_partition(rng, 5, 4);
    const Matrix w = testing::random_symmetric(part.total() + 1, rng, 4.0);
    const auto j = gangster_indices(part);
    CHECK(min_linear_over_box(w, j) == doctest::Approx(testing::direct_box_minimum(w, part)).epsilon(1e-12));
  }
}

TEST_CASE("lower_bound never exceeds the enumerated optimum") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = random_instance(2 + static_cast<int>(rng() % 4), 4, -10, 10, rng());
    const auto geo = LiftedGeometry::build(inst);
    const double opt = testing::enumerate_optimum(inst);
    const Matrix z = testing::random_symmetric(inst.partition.total() + 1, rng, 5.0);
    CHECK(lower_bound(z, geo, inst.partition.blocks()) <= opt + 1e-8 * (1.0 + std::abs(opt)));
  }
}

TEST_CASE("extract_approx") {
  Vector x(5);
  x << 0, 1, 1, 0, 0;
  const Matrix yx = testing::lifted_rank_one(x);
  CHECK(extract_approx(yx, UpperSource::first_column) == x);
  const Vector from_eig = extract_approx(yx, UpperSource::dominant_eigenvector);
  CHECK((from_eig - x).cwiseAbs().maxCoeff() <= 1e-12);

  Matrix corner = Matrix::Zero(6, 6);
  corner(0, 0) = 1.0;
  CHECK(extract_approx(corner, UpperSource::first_column).isZero(0.0));
  CHECK(extract_approx(corner, UpperSource::dominant_eigenvector).isZero(1e-15));

  std::mt19937_64 rng(33);
  const RotamerPartition part({2, 3});
  const auto j = gangster_indices(part);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix y = testing::random_symmetric(6, rng);
    y = y.cwiseMax(0.0).cwiseMin(1.0);
    for (const auto& [r, c] : j) y(r, c) = 0.0;
    y(0, 0) = 1.0;
    CHECK(extract_approx(y, UpperSource::first_column) == y.col(0).tail(5));
  }
}

TEST_CASE("round_to_feasible") {
  const RotamerPartition part({2, 2});
  Vector xa(4);
  xa << 0.7, 0.3, 0.2, 0.8;
  const auto a = round_to_feasible(xa, part);
  CHECK(a.choice == std::vector<int>{0, 1});
  Vector expected(4);
  expected << 1, 0, 0, 1;
  CHECK(to_indicator(a, part) == expected);

  xa << 0.5, 0.5, 0.1, 0.1;
  CHECK(round_to_feasible(xa, part).choice == std::vector<int>{0, 0});

  xa << 0, 1, 1, 0;
  CHECK(to_indicator(round_to_feasible(xa, part), part) == xa);
}

TEST_CASE("argmax rounding is the nearest feasible point") {
  std::mt19937_64 rng(34);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto part = testing::random_partition(rng, 5, 5);
    Vector xa(part.total());
    for (int k = 0; k < xa.size(); ++k) xa(k) = u(rng);
    double best = std::numeric_limits<double>::infinity();
    testing::for_each_assignment(part, [&](const Assignment& a) {
      best = std::min(best, (to_indicator(a, part) - xa).squaredNorm());
    });
    const Vector rounded = to_indicator(round_to_feasible(xa, part), part);
    CHECK(is_feasible(rounded, part));
    CHECK((rounded - xa).squaredNorm() == doctest::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("upper_bound") {
  const auto inst = testing::small_instance();
  Vector x(4);
  x << 1, 0, 0, 1;
  for (auto source : {UpperSource::first_column, UpperSource::dominant_eigenvector}) {
    const auto rec = upper_bound(testing::lifted_rank_one(x), inst, source);
    CHECK(rec.upper == 6.0);
    CHECK(rec.assignment.choice == std::vector<int>{0, 1});
    CHECK(rec.upper_source == source);
  }

  const auto zero = random_instance(3, 3, 0.0, 0.0, 1);
  std::mt19937_64 rng(35);
  const Matrix y = testing::random_symmetric(zero.partition.total() + 1, rng);
  CHECK(upper_bound(y, zero, UpperSource::first_column).upper == 0.0);

  for (int trial = 0; trial < 50; ++trial) {
    const auto r = random_instance(3, 4, -10, 10, rng());
    const double opt = testing::enumerate_optimum(r);
    const Matrix yr = testing::random_symmetric(r.partition.total() + 1, rng);
    for (auto source : {UpperSource::first_column, UpperSource::dominant_eigenvector}) {
      const auto rec = upper_bound(yr, r, source);
      CHECK(rec.upper == objective(rec.assignment, r));
      CHECK(rec.upper >= opt - 1e-12 * (1.0 + std::abs(opt)));
    }
  }
}

TEST_CASE("relative_gap") {
  CHECK(relative_gap(-48.46, -48.46) == 0.0);
  CHECK(relative_gap(1.0, 0.0) == 1.0);
  CHECK(relative_gap(0.0, 0.0) == 0.0);
  CHECK(relative_gap(10.0, 8.0) == doctest::Approx(4.0 / 19.0));
}
