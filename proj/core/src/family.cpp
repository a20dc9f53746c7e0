#include "maxsurf/family.hpp"

#include <cmath>

#include "maxsurf/errors.hpp"

namespace maxsurf {

WeierstrassData rotate_data(const WeierstrassData& data, double theta) {
  if (!std::isfinite(theta)) throw Error("rotation angle must be finite");
  WeierstrassData out = data;
  out.phase = data.phase + theta;
  return out;
}

SweepResult isometry_sweep(const FamilySpec& spec, std::span<const Complex> probes,
                           Complex basepoint, const Offsets& offsets, double h,
                           double tol) {
  if (spec.steps < 1) throw Error("sweep needs steps >= 1");
  if (!std::isfinite(spec.theta)) throw Error("sweep angle must be finite");

  SweepResult res;
  res.thetas.reserve(static_cast<std::size_t>(spec.steps) + 1);
  for (int k = 0; k <= spec.steps; ++k)
    res.thetas.push_back(spec.theta * k / spec.steps);

  std::vector<double> lam0, e0;
  lam0.reserve(probes.size());
  e0.reserve(probes.size());
  {
    SurfaceEval ev(spec.base, basepoint, offsets, PhiSign::Plus, tol);
    for (Complex p : probes) {
      lam0.push_back(conformal_factor(spec.base, p));
      e0.push_back(ev.forms(ev.at(p), h).E);
    }
  }

  for (int k = 1; k <= spec.steps; ++k) {
    WeierstrassData rotated = rotate_data(spec.base, res.thetas[static_cast<std::size_t>(k)]);
    SurfaceEval ev(rotated, basepoint, offsets, PhiSign::Plus, tol);
    for (std::size_t i = 0; i < probes.size(); ++i) {
      double lam = conformal_factor(rotated, probes[i]);
      double dev = std::abs(lam - lam0[i]) / (1.0 + lam0[i]);
      if (dev > res.max_conformal_dev) res.max_conformal_dev = dev;
      double e = ev.forms(ev.at(probes[i]), h).E;
      double dev_e = std::abs(e - e0[i]) / (1.0 + e0[i]);
      if (dev_e > res.max_metric_dev) res.max_metric_dev = dev_e;
    }
  }
  return res;
}

}  // namespace maxsurf
