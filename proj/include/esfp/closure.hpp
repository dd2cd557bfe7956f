#pragma once

#include <limits>

#include "esfp/moments.hpp"
#include "esfp/tensor3.hpp"

namespace esfp {

/// The value of nu that gives the monatomic Prandtl number 2/3.
inline constexpr double kNuMonatomic = -1.25;

/// Open interval of nu for which Pi = (1-nu) T I + nu Theta is positive definite,
/// with the upper end capped at 1.
struct NuInterval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = 1.0;

  bool contains(double nu) const { return nu > lo && nu < hi; }
};

/// Throws InvalidSpectrum unless 0 < lambda_min <= lambda_max <= 3T (up to
/// rounding).
NuInterval admissible_nu_interval(double temperature, double lambda_min, double lambda_max);

/// max(-5/4, -T / (lambda_max - T)); -5/4 when lambda_max <= T. When the second
/// argument wins, the result is pulled toward zero by a relative 1e-9 so Pi stays
/// strictly positive definite.
double select_nu(double temperature, double lambda_max);

/// (1 - nu) T I + nu Theta.
SymTensor3 build_pi(double nu, double temperature, const SymTensor3& theta);

struct TransportCoefficients {
  double viscosity = 0.0;
  double conductivity = 0.0;
  double prandtl = 0.0;
};

/// Chapman-Enskog coefficients of the ES-FP operator for R = 1:
/// mu = tau p / (2 (1 - nu)), kappa = 5/6 tau p, Pr = 3 / (2 (1 - nu)).
TransportCoefficients transport_coefficients(double tau, double pressure, double nu);

inline double prandtl_number(double nu) { return 1.5 / (1.0 - nu); }

/// Everything the particle update needs for one step.
struct ClosureState {
  double nu = 0.0;
  SymTensor3 pi;
  LowerTriangular3 chol;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double temperature = 0.0;
};

/// How nu is chosen each step.
struct NuMode {
  bool variable = true;
  double fixed_value = kNuMonatomic;

  static NuMode variable_nu() { return {}; }
  static NuMode fixed(double value) { return {false, value}; }
};

/// Spectrum of Theta, nu, Pi and its Cholesky factor for the given moments.
ClosureState make_closure(const MomentSet& moments, NuMode mode);

/// Factor g by which Theta - T I shrinks over `span` (in units of tau) under
/// dTheta/dt = 2 (1 - nu) (T I - Theta) with nu following `mode` continuously.
/// The eigenbasis of Theta is fixed along this flow and every deviation scales by
/// the same g, so only lambda_max needs tracking. With variable nu, while nu is
/// -T/(lambda_max - T) the deviation d = lambda_max - T obeys d' = -2 (d + T);
/// once d <= 0.8 T the floor -5/4 applies and the decay is exp(-4.5 t).
double relaxation_factor(NuMode mode, double temperature, double lambda_max, double span);

}  // namespace esfp
