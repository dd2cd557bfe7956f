#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string_view>

#include "esfp/closure.hpp"
#include "esfp/errors.hpp"
#include "esfp/moments.hpp"
#include "esfp/noise.hpp"
#include "esfp/parallel.hpp"
#include "esfp/tensor3.hpp"

namespace esfp {

inline constexpr double kMaxStepRatio = 0.1;

/// Time integrator for dV = -(V - u)/tau dt + sqrt(2/tau) A dW, A A^T = Pi.
///
/// kExplicitEuler:  V' = u + (1 - h)(V - u) + sqrt(2h) A B,  h = dt/tau.
///
/// kExponential: exact in law for the second- and third-moment dynamics,
///   V' = u + e^{-h}(V - u) + sqrt(1 - e^{-2h}) A_eff B,
/// where A_eff factors the e^{-2(h-s)}-weighted average of Pi(s) along the
/// closure's own relaxation over the step. That average is again of the form
/// Pi(nu_eff) with nu_eff = (g - e^{-2h}) / (1 - e^{-2h}), g being the
/// relaxation_factor of Theta - T I over the step; for constant nu this is
/// (e^{2 nu h} - 1) / (e^{2h} - 1). Heat flux then decays by exactly e^{-3h},
/// Theta - T I by g, and trace(Theta) is conserved in expectation. Both schemes
/// agree to first order in h.
enum class OuScheme { kExplicitEuler, kExponential };

std::string_view to_string(OuScheme scheme);
OuScheme parse_scheme(std::string_view text);

struct StepParams {
  double dt = 0.0;
  double tau = 1.0;
  OuScheme scheme = OuScheme::kExplicitEuler;
  std::uint64_t step_index = 0;

  double ratio() const { return dt / tau; }
};

struct StepCoefficients {
  double drift = 1.0;  ///< contraction applied to V - u
  double noise = 0.0;  ///< amplitude multiplying A B
};

/// Throws StabilityViolation unless 0 <= dt/tau <= 0.1 and tau > 0.
void check_stability(const StepParams& params);

StepCoefficients step_coefficients(const StepParams& params);

/// nu whose Pi is factored for the noise term: closure.nu for the explicit
/// scheme, nu_eff for the exponential one. With variable nu, nu_eff is kept at or
/// above closure.nu so the boundary guard of select_nu carries over.
double noise_nu(OuScheme scheme, NuMode mode, const ClosureState& closure, double ratio);

/// Advances every particle one step. `noise(step, particle)` supplies the
/// standard-normal triple for that particle.
template <class NoiseFn>
void ou_step_with(ParticleEnsemble& ens, Vector3 u, const LowerTriangular3& chol, const StepParams& params,
                  NoiseFn&& noise, unsigned threads = 1) {
  check_stability(params);
  const StepCoefficients k = step_coefficients(params);
  const std::size_t n = ens.size();
  auto& v = ens.velocities;
  for_each_block(block_count(n), threads, [&](std::size_t b) {
    const std::size_t end = std::min(n, (b + 1) * kBlockSize);
    for (std::size_t i = b * kBlockSize; i < end; ++i) {
      const Vector3 kick = chol.apply(noise(params.step_index, static_cast<std::uint64_t>(i)));
      v[i] = v[i] - (1.0 - k.drift) * (v[i] - u) + k.noise * kick;
    }
  });
}

/// ou_step_with drawing its noise from `stream`.
void ou_step(ParticleEnsemble& ens, Vector3 u, const LowerTriangular3& chol, const StepParams& params,
             const NoiseStream& stream, unsigned threads = 1);

/// Affine map V <- target_u + c (V - mean) with c = sqrt(3 target_T / trace(Theta)),
/// restoring the mean velocity and temperature. Throws DegenerateEnsemble when the
/// sample temperature is zero.
void renormalize(ParticleEnsemble& ens, Vector3 target_u, double target_temperature, unsigned threads = 1);

}  // namespace esfp
