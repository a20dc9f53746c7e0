#pragma once

#include <cstdint>
#include <vector>

#include "maxsurf/types.hpp"

namespace maxsurf {

struct ExclusionDisk {
  Complex center;
  double radius = 0.0;
};

/// Annular-sector parameter domain with exclusion disks. The sector must stay
/// clear of the unit circle (where the induced metric degenerates) by at least
/// kUnitCircleMargin on one side.
struct DomainSpec {
  double r_min = 0.0;
  double r_max = 0.0;
  double angle_min = 0.0;
  double angle_max = 0.0;
  int n_r = 0;
  int n_angle = 0;
  std::vector<ExclusionDisk> exclusions;

  static constexpr double kUnitCircleMargin = 1e-3;

  /// Throws InvalidDomain unless 0 < r_min < r_max, the radial band excludes
  /// the unit circle by the margin, n_r >= 2, n_angle >= 2, and
  /// 0 < angle_max - angle_min <= 2*pi.
  void validate() const;

  /// Sector membership (angles compared modulo 2*pi), minus exclusion disks.
  bool contains(Complex zeta) const;

  bool excluded(Complex zeta) const;
};

/// Grid of sample nodes over a DomainSpec. Node (i, j) = ring i, angle j at
/// index i * n_angle + j; nodes inside exclusion disks are flagged inactive.
struct SampleGrid {
  int n_r = 0;
  int n_angle = 0;
  std::vector<Complex> nodes;
  std::vector<std::uint8_t> active;

  int index(int i, int j) const { return i * n_angle + j; }
  int active_count() const;
};

/// Sample the domain: geometric spacing in r, linear in angle.
/// Throws InvalidDomain on an invalid spec.
SampleGrid sample_domain(const DomainSpec& spec);

}  // namespace maxsurf
