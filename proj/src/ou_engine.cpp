#include "esfp/ou_engine.hpp"

#include <string>

namespace esfp {

std::string_view to_string(OuScheme scheme) {
  return scheme == OuScheme::kExplicitEuler ? "explicit" : "exponential";
}

OuScheme parse_scheme(std::string_view text) {
  if (text == "explicit") return OuScheme::kExplicitEuler;
  if (text == "exponential") return OuScheme::kExponential;
  throw ConfigError("unknown scheme '" + std::string(text) + "' (expected explicit|exponential)");
}

void check_stability(const StepParams& params) {
  if (!(params.tau > 0.0)) throw StabilityViolation("tau must be positive");
  const double h = params.ratio();
  if (!(h >= 0.0) || h > kMaxStepRatio) {
    throw StabilityViolation("dt/tau = " + std::to_string(h) + " outside [0, 0.1]");
  }
}

StepCoefficients step_coefficients(const StepParams& params) {
  const double h = params.ratio();
  if (params.scheme == OuScheme::kExplicitEuler) return {1.0 - h, std::sqrt(2.0 * h)};
  return {std::exp(-h), std::sqrt(-std::expm1(-2.0 * h))};
}

double noise_nu(OuScheme scheme, NuMode mode, const ClosureState& closure, double ratio) {
  if (scheme == OuScheme::kExplicitEuler || ratio == 0.0) return closure.nu;
  if (!mode.variable) return std::expm1(2.0 * mode.fixed_value * ratio) / std::expm1(2.0 * ratio);
  const double g = relaxation_factor(mode, closure.temperature, closure.lambda_max, ratio);
  const double nu_eff = (g - std::exp(-2.0 * ratio)) / -std::expm1(-2.0 * ratio);
  return std::max(nu_eff, closure.nu);
}

void ou_step(ParticleEnsemble& ens, Vector3 u, const LowerTriangular3& chol, const StepParams& params,
             const NoiseStream& stream, unsigned threads) {
  ou_step_with(
      ens, u, chol, params,
      [&stream](std::uint64_t step, std::uint64_t particle) { return stream.standard_normal_triple(step, particle); },
      threads);
}

void renormalize(ParticleEnsemble& ens, Vector3 target_u, double target_temperature, unsigned threads) {
  const MomentSet m = compute_moments(ens, threads);
  const double c = std::sqrt(target_temperature / m.temperature);
  const std::size_t n = ens.size();
  auto& v = ens.velocities;
  for_each_block(block_count(n), threads, [&](std::size_t b) {
    const std::size_t end = std::min(n, (b + 1) * kBlockSize);
    for (std::size_t i = b * kBlockSize; i < end; ++i) v[i] = target_u + c * (v[i] - m.u);
  });
}

}  // namespace esfp
