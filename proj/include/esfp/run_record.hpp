#pragma once

#include "esfp/tensor3.hpp"

namespace esfp {

/// One row of a simulation time series.
struct RunRecord {
  double t = 0.0;
  SymTensor3 theta;
  double temperature = 0.0;
  Vector3 q;
  double nu = 0.0;
  double prandtl = 0.0;
  double anisotropy = 0.0;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// Diagonal entry of theta for a 1-based component index.
inline double directional_temperature(const RunRecord& r, int component) {
  return r.theta(component - 1, component - 1);
}

}  // namespace esfp
