#pragma once

#include <stdexcept>
#include <string>

namespace maxsurf {

/// Base class of all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Evaluation requested at (or indistinguishably close to) a singular point:
/// a pole, a vanishing quotient denominator, or a log branch point.
struct SingularEvaluation : Error {
  using Error::Error;
};

/// An evaluation overflowed to inf/nan.
struct NonFinite : Error {
  using Error::Error;
};

/// Expression text did not match the grammar.
struct ExprParseError : Error {
  using Error::Error;
};

/// An integration path passes within the clearance distance of a singularity.
struct PathThroughSingularity : Error {
  using Error::Error;
};

/// Adaptive quadrature could not reach the requested tolerance within the
/// refinement depth limit.
struct ToleranceNotMet : Error {
  using Error::Error;
};

/// The active nodes of a sampling grid are not 4-connected.
struct DisconnectedGrid : Error {
  using Error::Error;
};

/// A point lies outside the attached parameter domain.
struct DomainViolation : Error {
  using Error::Error;
};

/// The Gauss map degenerates on |zeta| = 1 (lightlike limit).
struct LightlikeGaussMap : Error {
  using Error::Error;
};

/// EG - F^2 vanished; mean curvature undefined.
struct DegenerateMetric : Error {
  using Error::Error;
};

/// A finite-difference stencil leaves the valid parameter region.
struct StencilOutOfDomain : Error {
  using Error::Error;
};

/// 1 + zeta*zeta_bar (or a similar required denominator) vanished.
struct DegenerateDenominator : Error {
  using Error::Error;
};

/// The principal square root argument landed on (-inf, 0].
struct BranchCutHit : Error {
  using Error::Error;
};

/// Newton inversion failed to converge.
struct NewtonDivergence : Error {
  using Error::Error;
};

/// Newton inversion hit a critical point (F' ~ 0).
struct CriticalPointOfF : Error {
  using Error::Error;
};

/// DomainSpec validation failed (bounds, unit-circle clearance, grid shape).
struct InvalidDomain : Error {
  using Error::Error;
};

}  // namespace maxsurf
