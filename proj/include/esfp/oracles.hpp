#pragma once

#include <optional>
#include <span>
#include <utility>

#include "esfp/run_record.hpp"
#include "esfp/tensor3.hpp"

namespace esfp {

/// q(t) = q0 exp(-3 t / tau).
Vector3 analytic_heat_flux(double t, Vector3 q0, double tau);

/// Solution at time t of dTheta/dt = 2 (1 - nu) / tau (T I - Theta) started from
/// theta_s at time s, for constant nu.
SymTensor3 analytic_theta(double t, double s, const SymTensor3& theta_s, double nu, double temperature, double tau);

struct TimeWindow {
  double t0 = 0.0;
  double t1 = 0.0;
};

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  TimeWindow window;  ///< x-range actually fitted
  std::size_t samples = 0;
};

/// Ordinary least squares y = slope x + intercept. Throws DegenerateFit for fewer
/// than 3 points or constant x.
FitResult linfit(std::span<const std::pair<double, double>> points);

struct PrandtlEstimate {
  double pr_n = 0.0;
  double slope_q = 0.0;      ///< |d ln|q| / dt|
  double slope_theta = 0.0;  ///< |d ln|T_kk - T| / dt|
  FitResult fit_q;
  FitResult fit_theta;
};

/// Decay rates of ln|q| and ln|T_kk - T| over the records whose time lies in
/// `window` (all records when absent, edges inclusive up to rounding); pr_n is
/// their ratio.
///
/// Throws DegenerateFit when fewer than 3 records qualify or |q| vanishes, and
/// SignChange when T_kk - T changes sign or vanishes inside the window.
PrandtlEstimate extract_prandtl(std::span<const RunRecord> series, std::optional<TimeWindow> window = std::nullopt,
                                int component = 1);

}  // namespace esfp
