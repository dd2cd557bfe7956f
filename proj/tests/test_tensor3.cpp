#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "esfp/errors.hpp"
#include "esfp/tensor3.hpp"
#include "support/oracles.hpp"

using namespace esfp;

TEST_CASE("cardan eigenvalues of simple tensors") {
  const auto id = eigenvalues_cardan(SymTensor3::identity());
  for (double l : id) CHECK(l == doctest::Approx(1.0).epsilon(1e-15));

  const auto d = eigenvalues_cardan(SymTensor3::diagonal(3.0, 1.0, 2.0));
  CHECK(d[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(d[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(d[2] == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("cardan matches the bisection oracle on seeded SPD tensors") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> eig(0.05, 4.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const SymTensor3 m = test::rotated_diagonal(rng, eig(rng), eig(rng), eig(rng));
    const auto cardan = eigenvalues_cardan(m);
    const auto oracle = test::bisection_eigenvalues(m);
    for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(cardan[k] - oracle[k]));

    const double scale = std::max(std::abs(cardan[0]), std::abs(cardan[2]));
    CHECK(std::abs(cardan[0] + cardan[1] + cardan[2] - trace(m)) <= 1e-10 * std::abs(trace(m)));
    CHECK(std::abs(cardan[0] * cardan[1] * cardan[2] - det(m)) <= 1e-9 * scale * scale * scale);
    CHECK(cardan[0] <= cardan[1]);
    CHECK(cardan[1] <= cardan[2]);
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("repeated eigenvalues stay finite") {
  std::mt19937_64 rng(7);
  const SymTensor3 cases[] = {
      SymTensor3::diagonal(2.0, 2.0, 5.0),
      SymTensor3::diagonal(5.0, 2.0, 2.0),
      test::rotated_diagonal(rng, 1.0, 1.0, 1.0 + 1e-12),
      test::rotated_diagonal(rng, 3.0, 3.0, 1.0),
      test::rotated_diagonal(rng, 0.0, 0.0, 3.0),
      SymTensor3{},
  };
  for (const auto& m : cases) {
    const auto l = eigenvalues_cardan(m);
    const auto oracle = test::bisection_eigenvalues(m);
    for (int k = 0; k < 3; ++k) {
      CHECK(std::isfinite(l[k]));
      CHECK(l[k] == doctest::Approx(oracle[k]).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("exactly repeated pairs keep full accuracy") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> small(1e-6, 0.99);
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double a = small(rng);
    // Pair below or above the isolated eigenvalue.
    const SymTensor3 m = i % 2 == 0 ? test::rotated_diagonal(rng, a, a, 3.0 - 2.0 * a)
                                    : test::rotated_diagonal(rng, 1.0 - 0.4 * a, 1.0 + 0.2 * a, 1.0 + 0.2 * a);
    const auto cardan = eigenvalues_cardan(m);
    const auto oracle = test::bisection_eigenvalues(m);
    for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(cardan[k] - oracle[k]) / oracle[2]);
  }
  CHECK(worst <= 1e-11);
}

TEST_CASE("cholesky of diagonal and dense tensors") {
  const auto id = cholesky(SymTensor3::identity());
  CHECK(id.a11 == 1.0);
  CHECK(id.a22 == 1.0);
  CHECK(id.a33 == 1.0);
  CHECK(id.a21 == 0.0);
  CHECK(id.a31 == 0.0);
  CHECK(id.a32 == 0.0);

  const auto d = cholesky(SymTensor3::diagonal(4.0, 9.0, 16.0));
  CHECK(d.a11 == 2.0);
  CHECK(d.a22 == 3.0);
  CHECK(d.a33 == 4.0);

  const SymTensor3 dense{2.0, 2.0, 2.0, 0.5, 0.5, 0.5};
  const auto a = cholesky(dense);
  CHECK(test::scaled_diff(a.gram(), dense) <= 1e-12);
  CHECK(a.a11 > 0.0);
  CHECK(a.a22 > 0.0);
  CHECK(a.a33 > 0.0);
}

TEST_CASE("cholesky reconstructs random SPD tensors") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> eig(1e-3, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const SymTensor3 m = test::rotated_diagonal(rng, eig(rng), eig(rng), eig(rng));
    CHECK(test::scaled_diff(cholesky(m).gram(), m) <= 1e-12);
  }
}

TEST_CASE("cholesky rejects tensors that are not positive definite") {
  CHECK_THROWS_AS(cholesky(SymTensor3::diagonal(1.0, 1.0, -1.0)), NotPositiveDefinite);
  CHECK_THROWS_AS(cholesky(SymTensor3::diagonal(0.0, 1.0, 1.0)), NotPositiveDefinite);
  CHECK_THROWS_AS(cholesky(SymTensor3{1.0, 1.0, 1.0, 1.0, 0.0, 0.0}), NotPositiveDefinite);
}

TEST_CASE("is_spd") {
  CHECK(is_spd(SymTensor3::identity()));
  CHECK_FALSE(is_spd(SymTensor3::diagonal(1.0, 1.0, -1.0)));
  CHECK_FALSE(is_spd(SymTensor3::diagonal(1.0, 1.0, 0.0)));
  CHECK(is_spd(SymTensor3::diagonal(1.0, 2.0, 3.0), 0.5));
  CHECK_FALSE(is_spd(SymTensor3::diagonal(1.0, 2.0, 3.0), 1.5));
}

TEST_CASE("trace, det and apply") {
  CHECK(trace(SymTensor3::identity()) == 3.0);
  CHECK(det(SymTensor3::identity()) == 1.0);
  CHECK(apply(SymTensor3::diagonal(2.0, 3.0, 4.0), {1.0, 1.0, 1.0}) == Vector3{2.0, 3.0, 4.0});
  CHECK(det(SymTensor3{2.0, 2.0, 2.0, 0.5, 0.5, 0.5}) == doctest::Approx(6.75).epsilon(1e-14));
  CHECK(apply(SymTensor3{1.0, 1.0, 1.0, 2.0, 3.0, 4.0}, {1.0, 0.0, 0.0}) == Vector3{1.0, 2.0, 3.0});
}

TEST_CASE("commutator of co-diagonal tensors vanishes") {
  std::mt19937_64 rng(3);
  const SymTensor3 a = test::rotated_diagonal(rng, 1.0, 2.0, 3.0);
  const SymTensor3 b = 0.5 * a + 2.0 * SymTensor3::identity();
  CHECK(commutator(a, b).norm() <= 1e-14);
  const Vector3 c = commutator(SymTensor3::diagonal(1.0, 2.0, 3.0), SymTensor3{0.0, 0.0, 0.0, 1.0, 0.0, 0.0});
  CHECK(c == Vector3{-1.0, 0.0, 0.0});
}
