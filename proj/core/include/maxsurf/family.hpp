#pragma once

#include <span>
#include <vector>

#include "maxsurf/types.hpp"
#include "maxsurf/weierstrass.hpp"

namespace maxsurf {

/// Associated family sweep: datum theta -> e^{i theta} M over [0, theta] in
/// `steps` equal increments.
struct FamilySpec {
  WeierstrassData base;
  double theta = kPi / 2;
  int steps = 8;
};

/// Rotate the datum: multiplies M by the unit complex e^{i theta} (carried as
/// the phase field, so |M| — and with it the conformal factor — is preserved
/// exactly, not just to rounding). Poles, domain and name are preserved.
WeierstrassData rotate_data(const WeierstrassData& data, double theta);

struct SweepResult {
  std::vector<double> thetas;
  /// max over theta, probes of |lambda^2(theta) - lambda^2(0)| / (1 + lambda^2(0))
  double max_conformal_dev = 0.0;
  /// same deviation for finite-difference E
  double max_metric_dev = 0.0;
};

/// Verify the family isometry on probe points (callers sample them from a
/// simply connected sector: rotated data generally have multivalued phi).
SweepResult isometry_sweep(const FamilySpec& spec, std::span<const Complex> probes,
                           Complex basepoint, const Offsets& offsets, double h = 1e-4,
                           double tol = 1e-12);

}  // namespace maxsurf
