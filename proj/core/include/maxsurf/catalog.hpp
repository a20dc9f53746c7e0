#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "maxsurf/cx_expr.hpp"
#include "maxsurf/hodograph.hpp"
#include "maxsurf/report.hpp"
#include "maxsurf/types.hpp"
#include "maxsurf/weierstrass.hpp"

namespace maxsurf {

/// A reference surface with every representation the library cross-checks:
/// Weierstrass datum, primitive F (F' = M), graph form, closed-form immersion
/// in zeta, and closed-form immersion in the hodographic coordinate
/// rho = F(zeta).
struct CatalogEntry {
  std::string name;
  WeierstrassData weierstrass;
  CxExpr F;
  GraphFunction graph;

  /// Closed immersion: position(zeta) = (Re we_x, Re we_y, Re we_phi).
  CxExpr we_x, we_y, we_phi;
  Vec3 closed_position(Complex zeta) const;

  /// Hodographic closed form: x = Re ho_x(rho), y = Re ho_y(rho),
  /// phi = ho_phi(rho) (the helicoid's phi involves conj(rho), hence a
  /// callable). phi agreement with the zeta form is modulo pi when
  /// phi_mod_pi is set (principal-branch wrap of the hodographic log).
  CxExpr ho_x, ho_y;
  std::function<double(Complex)> ho_phi;
  bool phi_mod_pi = false;

  /// Residual of the graph relation satisfied by immersed points, e.g.
  /// sinh|phi| - sqrt(x^2+y^2) for the catenoid; the sign the immersed phi
  /// carries relative to the graph convention on this sector is recorded in
  /// graph_phi_sign rather than silently flipped.
  std::function<double(const Vec3&)> graph_relation;
  int graph_phi_sign = +1;

  /// Canonical anchor: offsets = closed_position(basepoint), so contour
  /// integration and the closed forms describe the same surface copy.
  Complex basepoint;
  Offsets offsets;
};

/// phi(x, y) = sinh^{-1}(sqrt(x^2+y^2)); datum M = -1/(2 zeta^2), F = 1/(2 zeta),
/// sector 1.05 < |zeta| < 3, |arg zeta| < 3*pi/4.
const CatalogEntry& catenoid();

/// phi(x, y) = pi/2 + tan^{-1}(y/x); datum M = -i/(2 zeta^2), F = i/(2 zeta),
/// same sector (avoids the log branch cut).
const CatalogEntry& helicoid();

/// Cross-verify every representation of the entry at `samples` seeded random
/// sector points: (a) contour immersion vs closed form, (b) graph relation,
/// (c) F' = M, (d) graph PDE residual, (e) hodographic vs zeta closed forms.
/// Throws std::invalid_argument when samples <= 0.
VerificationReport cross_check(const CatalogEntry& entry, int samples, std::uint64_t seed);

}  // namespace maxsurf
