#include "maxsurf/domain.hpp"

#include <cmath>

#include "maxsurf/errors.hpp"

namespace maxsurf {

void DomainSpec::validate() const {
  if (!(r_min > 0.0) || !(r_min < r_max))
    throw InvalidDomain("require 0 < r_min < r_max");
  if (!std::isfinite(r_min) || !std::isfinite(r_max) || !std::isfinite(angle_min) ||
      !std::isfinite(angle_max))
    throw InvalidDomain("domain bounds must be finite");
  // The radial band must sit on one side of the unit circle with margin.
  bool below = r_max <= 1.0 - kUnitCircleMargin;
  bool above = r_min >= 1.0 + kUnitCircleMargin;
  if (!below && !above)
    throw InvalidDomain("radial band must clear |zeta| = 1 by at least " +
                        std::to_string(kUnitCircleMargin) + " on one side");
  double span = angle_max - angle_min;
  if (!(span > 0.0) || span > 2.0 * kPi + 1e-12)
    throw InvalidDomain("require 0 < angle_max - angle_min <= 2*pi");
  if (n_r < 2 || n_angle < 2) throw InvalidDomain("require n_r >= 2 and n_angle >= 2");
  for (const auto& d : exclusions) {
    if (!(d.radius > 0.0) || !std::isfinite(d.radius))
      throw InvalidDomain("exclusion disk radius must be positive and finite");
  }
}

namespace {

// Smallest nonnegative representative of t modulo 2*pi.
double wrap_angle(double t) {
  double w = std::fmod(t, 2.0 * kPi);
  if (w < 0.0) w += 2.0 * kPi;
  return w;
}

bool angle_in_range(double t, double lo, double hi) {
  if (hi - lo >= 2.0 * kPi - 1e-15) return true;  // full turn
  double rel = wrap_angle(t - lo);
  return rel <= hi - lo + 1e-15;
}

}  // namespace

bool DomainSpec::excluded(Complex zeta) const {
  for (const auto& d : exclusions)
    if (std::abs(zeta - d.center) < d.radius) return true;
  return false;
}

bool DomainSpec::contains(Complex zeta) const {
  double r = std::abs(zeta);
  if (r < r_min || r > r_max) return false;
  if (!angle_in_range(std::arg(zeta), angle_min, angle_max)) return false;
  return !excluded(zeta);
}

SampleGrid sample_domain(const DomainSpec& spec) {
  spec.validate();
  SampleGrid grid;
  grid.n_r = spec.n_r;
  grid.n_angle = spec.n_angle;
  grid.nodes.resize(static_cast<std::size_t>(spec.n_r) * spec.n_angle);
  grid.active.resize(grid.nodes.size());
  double log_lo = std::log(spec.r_min);
  double log_hi = std::log(spec.r_max);
  for (int i = 0; i < spec.n_r; ++i) {
    double fr = static_cast<double>(i) / (spec.n_r - 1);
    double r = std::exp(log_lo + fr * (log_hi - log_lo));
    for (int j = 0; j < spec.n_angle; ++j) {
      double fa = static_cast<double>(j) / (spec.n_angle - 1);
      double t = spec.angle_min + fa * (spec.angle_max - spec.angle_min);
      Complex z = r * cis(t);
      std::size_t k = static_cast<std::size_t>(grid.index(i, j));
      grid.nodes[k] = z;
      grid.active[k] = spec.excluded(z) ? 0 : 1;
    }
  }
  return grid;
}

int SampleGrid::active_count() const {
  int c = 0;
  for (auto a : active) c += a ? 1 : 0;
  return c;
}

}  // namespace maxsurf
