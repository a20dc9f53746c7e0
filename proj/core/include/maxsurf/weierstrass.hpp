#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "maxsurf/contour.hpp"
#include "maxsurf/cx_expr.hpp"
#include "maxsurf/domain.hpp"
#include "maxsurf/types.hpp"

namespace maxsurf {

/// A single meromorphic datum M on an annular-sector domain. The immersion is
///   x   = x0   + Re Int M_eff(w) (1 + w^2) dw
///   y   = y0   + Re Int i M_eff(w) (1 - w^2) dw
///   phi = phi0 +- Re Int 2 M_eff(w) w dw
/// with M_eff = e^{i phase} M. The rotation phase is carried separately from
/// the expression so modulus-only quantities (the conformal factor) are
/// bitwise independent of it: |e^{i phase}| = 1 exactly, mathematically, and
/// the associated-family isometry check relies on that exactness.
struct WeierstrassData {
  CxExpr M;
  double phase = 0.0;
  std::vector<PoleDecl> poles;
  std::optional<DomainSpec> domain;
  std::string name;
};

/// Validate a datum: every declared pole passes check_pole, M satisfies
/// Cauchy-Riemann spot checks away from the poles, and the domain (if any)
/// validates. Throws Error subtypes on failure.
void validate(const WeierstrassData& data);

/// Effective datum value e^{i phase} * M(zeta): what the immersion integrands
/// actually see.
Complex eval_M(const WeierstrassData& data, Complex zeta);

/// Immersed surface point at zeta, integrating from the basepoint. If zeta
/// equals the basepoint exactly, returns the offsets exactly. With a domain
/// attached, zeta must lie in it (DomainViolation); the connecting path is
/// validated against the declared poles (PathThroughSingularity).
Vec3 immersion(const WeierstrassData& data, Complex basepoint, const Offsets& offsets,
               Complex zeta, PhiSign phi_sign = PhiSign::Plus, double tol = 1e-12);

/// Conformal factor lambda^2 = (|M(zeta)| (1 - |zeta|^2) / 2)^2 in the
/// half-normalized convention. The induced first fundamental form of the
/// immersion above satisfies E = G = 4 * conformal_factor (i.e. the metric is
/// (|M|(1-|zeta|^2))^2 |dzeta|^2); see fundamental_forms.
double conformal_factor(const WeierstrassData& data, Complex zeta);

/// Unit timelike normal N(zeta) = (2 Re zeta, 2 Im zeta, -(1+|zeta|^2)) /
/// (1-|zeta|^2); <N,N> = -1, N_3 < 0 for |zeta| < 1. Throws LightlikeGaussMap
/// when |zeta| is within 1e-9 of 1.
Vec3 gauss_map(Complex zeta);

/// Inverse stereographic projection from the unit disk complement/interior to
/// the two-sheeted hyperboloid: tau -> (-2 Re tau, -2 Im tau, |tau|^2 + 1) /
/// (|tau|^2 - 1). Value-identical to gauss_map (the quotient arrangements
/// differ only by IEEE sign symmetry).
Vec3 stereographic(Complex tau);

struct FundamentalForms {
  double E, F, G;  // first form <X_i, X_j>_L
  double e, f, g;  // second form <X_ij, N>_L
};

/// First and second fundamental forms by central finite differences of the
/// immersion with step h * max(1, |zeta|). The 3x3 stencil must stay on one
/// side of |zeta| = 1, clear of poles, and (when a domain is attached) inside
/// the domain up to a stencil-width slack, so boundary nodes of a sampled
/// domain still admit forms (StencilOutOfDomain otherwise).
FundamentalForms fundamental_forms(const WeierstrassData& data, Complex basepoint,
                                   const Offsets& offsets, Complex zeta, double h = 1e-4,
                                   PhiSign phi_sign = PhiSign::Plus, double tol = 1e-12);

/// H = (eG - 2fF + gE) / (2 (EG - F^2)). Throws DegenerateMetric when
/// |EG - F^2| < 1e-18.
double mean_curvature(const FundamentalForms& forms);

/// Data-level periods around one declared pole (applies the family phase,
/// validates that the circle clears the other poles).
PeriodReport period_report(const WeierstrassData& data, const PoleDecl& pole,
                           double radius = 0.25);

/// Shared immersion engine. Anchors carry the accumulated complex integrals,
/// so nearby evaluations (finite-difference stencils) add only short-segment
/// integrals: the increments stay machine-accurate instead of inheriting the
/// absolute quadrature tolerance, which the tight FD checks depend on.
class SurfaceEval {
 public:
  SurfaceEval(WeierstrassData data, Complex basepoint, Offsets offsets,
              PhiSign phi_sign = PhiSign::Plus, double tol = 1e-12);

  struct Anchor {
    Complex zeta;
    std::array<Complex, 3> acc;  // complex integrals of the three integrands
  };

  /// Integrate from the basepoint to zeta (sector route when a domain is
  /// attached: angular arc at |basepoint|, then radial segment).
  Anchor at(Complex zeta) const;

  /// Extend an anchor by a straight hop to zeta2 (intended for short moves).
  Anchor shift(const Anchor& from, Complex zeta2) const;

  Vec3 position(const Anchor& a) const;
  Vec3 position(Complex zeta) const;

  FundamentalForms forms(const Anchor& a, double h) const;

  const WeierstrassData& data() const { return data_; }
  Complex basepoint() const { return basepoint_; }
  const Offsets& offsets() const { return offsets_; }

 private:
  WeierstrassData data_;
  Complex basepoint_;
  Offsets offsets_;
  PhiSign phi_sign_;
  double tol_;
  std::array<CxExpr, 3> integrand_;
  std::vector<Complex> pole_locs_;
};

}  // namespace maxsurf
