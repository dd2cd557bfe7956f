#include "esfp/closure.hpp"

#include <cmath>
#include <string>

#include "esfp/errors.hpp"

namespace esfp {

namespace {
constexpr double kSpectrumTolerance = 1e-10;
constexpr double kBoundarySafety = 1.0 - 1e-9;
}  // namespace

NuInterval admissible_nu_interval(double temperature, double lambda_min, double lambda_max) {
  if (!(lambda_min > 0.0)) throw InvalidSpectrum("admissible_nu_interval: lambda_min must be positive");
  if (lambda_min > lambda_max) throw InvalidSpectrum("admissible_nu_interval: lambda_min exceeds lambda_max");
  if (lambda_max > 3.0 * temperature * (1.0 + kSpectrumTolerance)) {
    throw InvalidSpectrum("admissible_nu_interval: lambda_max exceeds trace 3T");
  }
  NuInterval out;
  if (lambda_max > temperature) out.lo = -temperature / (lambda_max - temperature);
  if (lambda_min < temperature) out.hi = std::min(1.0, temperature / (temperature - lambda_min));
  return out;
}

double select_nu(double temperature, double lambda_max) {
  if (lambda_max <= temperature) return kNuMonatomic;
  const double bound = -temperature / (lambda_max - temperature);
  if (bound < kNuMonatomic) return kNuMonatomic;
  return bound * kBoundarySafety;
}

SymTensor3 build_pi(double nu, double temperature, const SymTensor3& theta) {
  const double iso = (1.0 - nu) * temperature;
  return {
      iso + nu * theta.xx, iso + nu * theta.yy, iso + nu * theta.zz,
      nu * theta.xy,       nu * theta.xz,       nu * theta.yz,
  };
}

TransportCoefficients transport_coefficients(double tau, double pressure, double nu) {
  return {
      tau * pressure / (2.0 * (1.0 - nu)),
      5.0 / 6.0 * tau * pressure,
      prandtl_number(nu),
  };
}

ClosureState make_closure(const MomentSet& moments, NuMode mode) {
  ClosureState s;
  s.temperature = moments.temperature;
  const Spectrum3 lambda = eigenvalues_cardan(moments.theta);
  s.lambda_min = lambda[0];
  s.lambda_max = lambda[2];
  if (mode.variable) {
    s.nu = select_nu(s.temperature, s.lambda_max);
  } else {
    if (!(mode.fixed_value < 1.0)) throw InvalidSpectrum("make_closure: fixed nu must be below 1");
    s.nu = mode.fixed_value;
  }
  s.pi = build_pi(s.nu, s.temperature, moments.theta);
  try {
    s.chol = cholesky(s.pi);
  } catch (const NotPositiveDefinite& e) {
    throw NotPositiveDefinite(std::string(e.what()) + " (nu = " + std::to_string(s.nu) + ")");
  }
  return s;
}

double relaxation_factor(NuMode mode, double temperature, double lambda_max, double span) {
  if (!mode.variable) return std::exp(-2.0 * (1.0 - mode.fixed_value) * span);

  const double floor_rate = 2.0 * (1.0 - kNuMonatomic);
  const double d0 = lambda_max - temperature;
  const double switch_dev = -temperature / kNuMonatomic;
  if (d0 <= switch_dev) return std::exp(-floor_rate * span);

  // Time at which (d0 + T) e^{-2t} - T reaches the switch deviation.
  const double t_switch = 0.5 * std::log((d0 + temperature) / (switch_dev + temperature));
  if (span <= t_switch) return ((d0 + temperature) * std::exp(-2.0 * span) - temperature) / d0;
  return switch_dev / d0 * std::exp(-floor_rate * (span - t_switch));
}

}  // namespace esfp
