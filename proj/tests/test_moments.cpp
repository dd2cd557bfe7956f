#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "esfp/errors.hpp"
#include "esfp/harness.hpp"
#include "esfp/moments.hpp"
#include "esfp/oracles.hpp"

using namespace esfp;

namespace {

// E[X^p] for X = 100 s^4 - 20, s ~ U[0,1], via the binomial expansion and
// E[s^{4j}] = 1 / (4j + 1).
double quartic_raw_moment(int p) {
  double sum = 0.0;
  double binom = 1.0;
  for (int j = 0; j <= p; ++j) {
    sum += binom * std::pow(100.0, j) * std::pow(-20.0, p - j) / (4.0 * j + 1.0);
    binom = binom * (p - j) / (j + 1);
  }
  return sum;
}

// Standard error of the (1/N) sample variance given the fourth central moment.
double variance_se(double var, double mu4, double n) { return std::sqrt((mu4 - var * var) / n); }

}  // namespace

TEST_CASE("two opposite particles") {
  ParticleEnsemble ens{{{1.0, 0.0, 0.0}, {-1.0, 0.0, 0.0}}, 1.0};
  const MomentSet m = compute_moments(ens);
  CHECK(m.u == Vector3{});
  CHECK(m.theta == SymTensor3::diagonal(1.0, 0.0, 0.0));
  CHECK(m.temperature == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(m.pressure == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(m.q == Vector3{});
  CHECK(m.energy == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("degenerate ensembles are rejected") {
  CHECK_THROWS_AS(compute_moments(ParticleEnsemble{{{1.0, 2.0, 3.0}}, 1.0}), DegenerateEnsemble);
  CHECK_THROWS_AS(compute_moments(ParticleEnsemble{{{1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}}, 1.0}), DegenerateEnsemble);
}

TEST_CASE("central moments are Galilean invariant and exactly consistent") {
  const auto ens = sample_case1(50'000, NoiseStream(5));
  ParticleEnsemble shifted = ens;
  const Vector3 c{12.5, -3.0, 7.25};
  for (auto& v : shifted.velocities) v = v + c;
  shifted.rho = 2.0;

  const MomentSet a = compute_moments(ens);
  const MomentSet b = compute_moments(shifted);
  for (int k = 0; k < 3; ++k) CHECK(b.u[k] - a.u[k] == doctest::Approx(c[k]).epsilon(1e-12));
  CHECK((a.theta - b.theta).max_abs() <= 1e-11 * a.theta.max_abs());
  CHECK((2.0 * a.q - b.q).norm() <= 1e-10 * b.q.norm());

  for (const MomentSet& m : {a, b}) {
    CHECK(trace(m.theta) == doctest::Approx(3.0 * m.temperature).epsilon(1e-15));
    CHECK(m.energy == doctest::Approx(0.5 * m.rho * m.u.dot(m.u) + 1.5 * m.rho * m.temperature).epsilon(1e-15));
    CHECK(m.pressure == m.rho * m.temperature);
  }
}

TEST_CASE("permutation invariance and thread-count independence") {
  const auto ens = sample_case2(30'000, NoiseStream(8));
  ParticleEnsemble reversed = ens;
  std::reverse(reversed.velocities.begin(), reversed.velocities.end());
  const MomentSet a = compute_moments(ens);
  const MomentSet b = compute_moments(reversed);
  CHECK((a.theta - b.theta).max_abs() <= 1e-12 * a.theta.max_abs());
  CHECK((a.q - b.q).norm() <= 1e-11 * a.q.norm());

  const MomentSet c = compute_moments(ens, 4);
  CHECK(a.theta == c.theta);
  CHECK(a.q == c.q);
  CHECK(a.u == c.u);
}

TEST_CASE("case-1 initial law at 10^6 samples") {
  const double n = 1e6;
  const auto ens = sample_case1(static_cast<std::size_t>(n), NoiseStream(2));
  const MomentSet m = compute_moments(ens);

  const double var1 = quartic_raw_moment(2);
  const double mu4_1 = quartic_raw_moment(4);
  const double var2 = 1e4 / 12.0;
  const double mu4_2 = std::pow(50.0, 4) / 5.0;
  CHECK(quartic_raw_moment(1) == doctest::Approx(0.0).scale(1.0));
  CHECK(var1 == doctest::Approx(6400.0 / 9.0).epsilon(1e-12));

  CHECK(std::abs(m.theta.xx - var1) < 4.0 * variance_se(var1, mu4_1, n));
  CHECK(std::abs(m.theta.yy - var2) < 4.0 * variance_se(var2, mu4_2, n));
  CHECK(std::abs(m.theta.zz - var2) < 4.0 * variance_se(var2, mu4_2, n));
  CHECK(std::abs(m.u.x) < 4.0 * std::sqrt(var1 / n));
  CHECK(std::abs(m.u.y) < 4.0 * std::sqrt(var2 / n));

  // q1 = E[X^3] / 2; the standard error is estimated from the sample.
  const double q1 = 0.5 * quartic_raw_moment(3);
  CHECK(q1 == doctest::Approx(0.5 * (1e6 / 13.0 - 6e5 / 9.0 + 1.2e5 / 5.0 - 8000.0)).epsilon(1e-12));
  double sq = 0.0;
  for (const auto& v : ens.velocities) {
    const Vector3 c = v - m.u;
    const double term = 0.5 * c.x * c.dot(c) - m.q.x;
    sq += term * term;
  }
  const double se_q = std::sqrt(sq / n / n);
  CHECK(std::abs(m.q.x - q1) < 4.0 * se_q);
}

TEST_CASE("isotropic Maxwellian gives theta = T0 I and q = 0") {
  const double n = 1e6;
  const double t0 = 2.5;
  const auto ens = sample_gaussian(static_cast<std::size_t>(n), NoiseStream(4), {1.0, -2.0, 0.5}, {t0, t0, t0});
  const MomentSet m = compute_moments(ens);
  const double se_diag = t0 * std::sqrt(2.0 / n);
  const double se_off = t0 / std::sqrt(n);
  // q_k = c_k |c|^2 / 2 has variance 35 T^3 / 4 for a Maxwellian.
  const double se_q = std::sqrt(35.0 * t0 * t0 * t0 / 4.0 / n);
  CHECK(std::abs(m.theta.xx - t0) < 4 * se_diag);
  CHECK(std::abs(m.theta.yy - t0) < 4 * se_diag);
  CHECK(std::abs(m.theta.zz - t0) < 4 * se_diag);
  CHECK(std::abs(m.theta.xy) < 4 * se_off);
  CHECK(std::abs(m.theta.xz) < 4 * se_off);
  CHECK(std::abs(m.theta.yz) < 4 * se_off);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(m.q[k]) < 4 * se_q);
}

TEST_CASE("gaussian surrogate anisotropy") {
  CHECK(gaussian_surrogate_anisotropy(2.0 * SymTensor3::identity(), 2.0) == doctest::Approx(0.0).scale(1.0));
  CHECK(gaussian_surrogate_anisotropy(SymTensor3::diagonal(3.0, 1e-300, 1e-300), 1.0) ==
        doctest::Approx(2.0).epsilon(1e-14));

  const SymTensor3 theta_s{2.0, 0.5, 0.5, 0.1, 0.0, -0.05};
  double previous = gaussian_surrogate_anisotropy(theta_s, 1.0);
  for (int i = 1; i <= 50; ++i) {
    const double t = 0.02 * i;
    const double a = gaussian_surrogate_anisotropy(analytic_theta(t, 0.0, theta_s, kNuMonatomic, 1.0, 1.0), 1.0);
    CHECK(a < previous);
    previous = a;
  }
}
