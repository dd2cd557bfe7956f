#include "esfp/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "esfp/errors.hpp"

namespace esfp {

Vector3 analytic_heat_flux(double t, Vector3 q0, double tau) { return std::exp(-3.0 * t / tau) * q0; }

SymTensor3 analytic_theta(double t, double s, const SymTensor3& theta_s, double nu, double temperature, double tau) {
  const double decay = std::exp(-2.0 * (1.0 - nu) * (t - s) / tau);
  return decay * theta_s + ((1.0 - decay) * temperature) * SymTensor3::identity();
}

FitResult linfit(std::span<const std::pair<double, double>> points) {
  const std::size_t n = points.size();
  if (n < 3) throw DegenerateFit("linfit: need at least 3 points, got " + std::to_string(n));

  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  double xmin = points.front().first, xmax = xmin;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
  }
  if (!(sxx > 0.0)) throw DegenerateFit("linfit: x values are all equal");

  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  // A constant y is fitted exactly.
  fit.r_squared = syy > 0.0 ? std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0) : 1.0;
  fit.window = {xmin, xmax};
  fit.samples = n;
  return fit;
}

PrandtlEstimate extract_prandtl(std::span<const RunRecord> series, std::optional<TimeWindow> window, int component) {
  if (component < 1 || component > 3) throw DegenerateFit("extract_prandtl: component must be 1, 2 or 3");

  std::vector<std::pair<double, double>> log_q;
  std::vector<std::pair<double, double>> log_theta;
  int sign = 0;
  // Record times are n * dt, so edges like 0.3 must accept 3 * 0.1.
  const double slack = window ? 1e-9 * std::max({1.0, std::abs(window->t0), std::abs(window->t1)}) : 0.0;
  for (const RunRecord& r : series) {
    if (window && (r.t < window->t0 - slack || r.t > window->t1 + slack)) continue;
    const double qn = r.q.norm();
    if (!(qn > 0.0)) throw DegenerateFit("extract_prandtl: |q| vanishes at t = " + std::to_string(r.t));
    const double dev = directional_temperature(r, component) - r.temperature;
    const int s = (dev > 0.0) - (dev < 0.0);
    if (s == 0 || (sign != 0 && s != sign)) {
      throw SignChange("extract_prandtl: T" + std::to_string(component) + std::to_string(component) +
                       " - T changes sign at t = " + std::to_string(r.t));
    }
    sign = s;
    log_q.emplace_back(r.t, std::log(qn));
    log_theta.emplace_back(r.t, std::log(std::abs(dev)));
  }

  PrandtlEstimate est;
  est.fit_q = linfit(log_q);
  est.fit_theta = linfit(log_theta);
  est.slope_q = std::abs(est.fit_q.slope);
  est.slope_theta = std::abs(est.fit_theta.slope);
  if (!(est.slope_theta > 0.0)) throw DegenerateFit("extract_prandtl: flat temperature deviation");
  est.pr_n = est.slope_q / est.slope_theta;
  return est;
}

}  // namespace esfp
