#include <cmath>
#include <exception>
#include <numbers>

#include "esfp/harness.hpp"

namespace esfp {
namespace {

// v1 = scale * (100 s^4 - 20), v2 and v3 uniform on [-50, 50].
ParticleEnsemble sample_quartic_case(std::size_t n, const NoiseStream& stream, double scale, unsigned threads) {
  ParticleEnsemble ens;
  ens.velocities.resize(n);
  auto& v = ens.velocities;
  for_each_block(block_count(n), threads, [&](std::size_t b) {
    const std::size_t end = std::min(n, (b + 1) * kBlockSize);
    for (std::size_t i = b * kBlockSize; i < end; ++i) {
      const auto u = stream.uniform4(StreamDomain::kInitialSample, 0, i);
      const double s2 = u[0] * u[0];
      v[i] = {scale * (100.0 * s2 * s2 - 20.0), 100.0 * u[1] - 50.0, 100.0 * u[2] - 50.0};
    }
  });
  return ens;
}

}  // namespace

ParticleEnsemble sample_case1(std::size_t n, const NoiseStream& stream, unsigned threads) {
  return sample_quartic_case(n, stream, 1.0, threads);
}

ParticleEnsemble sample_case2(std::size_t n, const NoiseStream& stream, unsigned threads) {
  return sample_quartic_case(n, stream, 100.0, threads);
}

ParticleEnsemble sample_gaussian(std::size_t n, const NoiseStream& stream, Vector3 mean, Vector3 temperatures,
                                 unsigned threads) {
  ParticleEnsemble ens;
  ens.velocities.resize(n);
  const Vector3 sigma{std::sqrt(temperatures.x), std::sqrt(temperatures.y), std::sqrt(temperatures.z)};
  auto& v = ens.velocities;
  for_each_block(block_count(n), threads, [&](std::size_t b) {
    const std::size_t end = std::min(n, (b + 1) * kBlockSize);
    for (std::size_t i = b * kBlockSize; i < end; ++i) {
      const auto u = stream.uniform4(StreamDomain::kInitialSample, 0, i);
      const double r0 = std::sqrt(-2.0 * std::log(u[0]));
      const double r1 = std::sqrt(-2.0 * std::log(u[2]));
      const double a0 = 2.0 * std::numbers::pi * u[1];
      const double a1 = 2.0 * std::numbers::pi * u[3];
      v[i] = mean + Vector3{sigma.x * r0 * std::cos(a0), sigma.y * r0 * std::sin(a0), sigma.z * r1 * std::cos(a1)};
    }
  });
  return ens;
}

ParticleEnsemble sample_initial(const SimConfig& config, const NoiseStream& stream) {
  switch (config.preset) {
    case Preset::kCase1: return sample_case1(config.particles, stream, config.threads);
    case Preset::kCase2: return sample_case2(config.particles, stream, config.threads);
    case Preset::kCustom:
      return sample_gaussian(config.particles, stream, config.gaussian_mean, config.gaussian_temperatures,
                             config.threads);
  }
  throw ConfigError("unknown preset");
}

RunError::RunError(std::size_t step, const std::string& reason)
    : Error("step " + std::to_string(step) + ": " + reason), step_(step) {}

RunOutput run_simulation(const SimConfig& config, const StepObserver& observer) {
  config.validate();
  const NoiseStream stream(config.seed);
  const unsigned threads = config.threads;
  const std::size_t steps = config.step_count();
  const double dt = config.t_final / static_cast<double>(steps);
  const double ratio = dt / config.tau;

  RunOutput out;
  out.final_ensemble = sample_initial(config, stream);
  ParticleEnsemble& ens = out.final_ensemble;
  out.initial_moments = compute_moments(ens, threads);
  const Vector3 target_u = out.initial_moments.u;
  const double target_temperature = out.initial_moments.temperature;

  for (std::size_t n = 0; n <= steps; ++n) {
    try {
      const MomentSet m = compute_moments(ens, threads);
      const ClosureState closure = make_closure(m, config.nu_mode);
      if (observer) observer(n, m, closure);

      if (n % config.record_every == 0 || n == steps) {
        RunRecord r;
        r.t = static_cast<double>(n) * dt;
        r.theta = m.theta;
        r.temperature = m.temperature;
        r.q = m.q;
        r.nu = closure.nu;
        r.prandtl = prandtl_number(closure.nu);
        r.anisotropy = std::max(std::abs(closure.lambda_min - m.temperature),
                                std::abs(closure.lambda_max - m.temperature));
        out.records.push_back(r);
      }
      if (n == steps) break;

      const double nu_noise = noise_nu(config.scheme, config.nu_mode, closure, ratio);
      const LowerTriangular3 chol =
          nu_noise == closure.nu ? closure.chol : cholesky(build_pi(nu_noise, m.temperature, m.theta));
      const StepParams params{dt, config.tau, config.scheme, n};
      ou_step(ens, m.u, chol, params, stream, threads);
      if (config.renormalize) renormalize(ens, target_u, target_temperature, threads);
    } catch (const Error& e) {
      std::throw_with_nested(RunError(n, e.what()));
    }
  }
  return out;
}

}  // namespace esfp
