#pragma once

#include <cstddef>
#include <vector>

#include "esfp/tensor3.hpp"

namespace esfp {

/// N equal-weight velocity samples standing for a homogeneous distribution
/// function of constant mass density `rho`.
struct ParticleEnsemble {
  std::vector<Vector3> velocities;
  double rho = 1.0;

  std::size_t size() const { return velocities.size(); }
  /// Shared numerical weight; rho = weight * N.
  double weight() const { return velocities.empty() ? 0.0 : rho / static_cast<double>(velocities.size()); }
};

/// Macroscopic moments of an ensemble (gas constant R = 1).
struct MomentSet {
  double rho = 0.0;
  Vector3 u;
  double energy = 0.0;       ///< rho |u|^2 / 2 + 3 rho T / 2
  double temperature = 0.0;  ///< trace(theta) / 3
  double pressure = 0.0;     ///< rho T
  SymTensor3 theta;          ///< temperature tensor, 1/N central second moment
  Vector3 q;                 ///< heat flux, rho/2 * mean((v-u)|v-u|^2)
};

/// Two-pass estimator: a blocked mean pass, then one fused pass for theta and q
/// over centred velocities. Reductions combine fixed-size blocks in order, so the
/// result is bit-identical for any `threads`.
///
/// Throws DegenerateEnsemble when N < 2 or all velocities coincide.
MomentSet compute_moments(const ParticleEnsemble& ens, unsigned threads = 1);

/// Distance of the spectrum of `theta` from isotropy: max_i |lambda_i - T|.
double gaussian_surrogate_anisotropy(const SymTensor3& theta, double temperature);

}  // namespace esfp
