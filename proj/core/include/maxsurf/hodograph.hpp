#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>

#include "maxsurf/cx_expr.hpp"
#include "maxsurf/types.hpp"
#include "maxsurf/weierstrass.hpp"

namespace maxsurf {

/// Characteristic coordinates u = phi_zbar, v = phi_z of a spacelike graph.
/// For real graphs v = conj(u) and 4uv = |grad phi|^2 in [0, 1).
struct CharacteristicPair {
  Complex u, v;
};

/// (u, v) = (zeta, zeta_bar) / (1 + zeta*zeta_bar), treating zeta and
/// zeta_bar as independent complex arguments. Throws DegenerateDenominator.
CharacteristicPair uv_from_zeta(Complex zeta, Complex zeta_bar);

/// Inverse map. Principal branch (cancellation-free form):
///   zeta = 2u / (1 + sqrt(1 - 4uv)),  zeta_bar = 2v / (1 + sqrt(1 - 4uv)),
/// which attains the analytic limits zeta -> u (v -> 0), zeta_bar -> v
/// (u -> 0). The outer branch (1 + sqrt(1-4uv)) / (2v) recovers solutions
/// with zeta*zeta_bar > 1. Throws BranchCutHit when 1 - 4uv lands on
/// (-inf, 0]; DegenerateDenominator on the outer branch with u or v = 0.
std::pair<Complex, Complex> zeta_from_uv(Complex u, Complex v, bool outer_branch = false);

struct ProbeRect {
  double x_min, x_max, y_min, y_max;
};

/// A height function phi(x, y) evaluable at complex arguments. Backed either
/// by an expression tree in two variables (x = variable 0, y = variable 1) or
/// by a callable (used for numerically reconstructed graphs). The spacelike
/// flag records whether phi_x^2 + phi_y^2 < 1 held at 100 seeded probe points
/// of the probe region.
class GraphFunction {
 public:
  static GraphFunction from_expr(const CxExpr& expr_xy, const ProbeRect& region);
  static GraphFunction from_callable(std::function<Complex(Complex, Complex)> fn,
                                     const ProbeRect& region, bool probe_spacelike = true);

  Complex operator()(Complex x, Complex y) const;
  bool spacelike() const { return spacelike_; }
  const std::optional<CxExpr>& expr() const { return expr_; }
  const ProbeRect& probe_region() const { return region_; }

  /// The graph (x, y) -> phi(i*x, y) entering the Wick rotation (exact tree
  /// rewrite when expression-backed).
  GraphFunction wick_rotated_x() const;

 private:
  std::function<Complex(Complex, Complex)> fn_;
  std::optional<CxExpr> expr_;
  ProbeRect region_{};
  bool spacelike_ = false;
};

inline constexpr std::uint64_t kSpacelikeProbeSeed = 0x5eedf00dULL;

/// Recompute the gradient-bound probe (used by the construction itself, and
/// by tests to confirm the stored flag is consistent).
bool recheck_spacelike(const GraphFunction& g, int probes = 100,
                       std::uint64_t seed = kSpacelikeProbeSeed, double h = 1e-5);

/// Residual of the maximal surface equation
///   (1 - phi_x^2) phi_yy + 2 phi_x phi_y phi_xy + (1 - phi_y^2) phi_xx
/// by central differences with step h per variable.
Complex mse_residual(const GraphFunction& g, Complex x, Complex y, double h = 1e-5);

/// Residual of the Born-Infeld equation
///   (1 + phi_x^2) phi_yy - 2 phi_x phi_y phi_xy - (1 - phi_y^2) phi_xx.
Complex bie_residual(const GraphFunction& g, Complex x, Complex y, double h = 1e-5);

/// Residual of the Euclidean minimal surface equation
///   (1 + phi_x^2) phi_yy - 2 phi_x phi_y phi_xy + (1 + phi_y^2) phi_xx.
Complex minse_residual(const GraphFunction& g, Complex x, Complex y, double h = 1e-5);

/// Wick rotation x -> ix identity: returns
///   (lhs, rhs) = (mse_residual of phi(i*., .) at (x, y),
///                 bie_residual of phi at (i*x, y));
/// the two agree for solutions carried across the rotation.
std::pair<Complex, Complex> wick_check(const GraphFunction& g, Complex x, Complex y,
                                       double h = 1e-5);

/// Compatibility residual zeta^2 * dz/dzeta(conj) - dz/dzeta of the hodograph
/// reconstruction z = z0 + conj(F(zeta)) + Int^zeta w^2 F'(w) dw, evaluated by
/// Wirtinger finite differences (step h) with anchored short-segment
/// integration. Identically 0 for exact data; the numeric value measures the
/// construction's consistency.
Complex hodograph_compatibility_residual(const CxExpr& F, Complex zeta, double h = 1e-5,
                                         double tol = 1e-12);

/// Same residual with F' = M taken from a datum (no symbolic primitive
/// needed; only derivatives of the reconstruction enter, so the choice of
/// integration constant drops out).
Complex hodograph_compatibility_residual(const WeierstrassData& data, Complex zeta,
                                         double h = 1e-5, double tol = 1e-12);

/// Dual-route Jacobian of the characteristic change of variables:
///   first  = d(u~, v~) / d(xi~, eta~) by chart-displaced finite differences,
///   second = (phi_xy^2 - phi_xx phi_yy) / 4 by direct second differences.
/// Inner differences use step h; the outer chart step is max(1e-3, h) (the
/// nested-difference noise floor ~eps/h / H plus H^2 truncation stays below
/// 1e-7 there, comfortably inside the 1e-5 relative contract).
std::pair<Complex, Complex> jacobian_identity(const GraphFunction& g, Complex x, Complex y,
                                              double h = 1e-4);

/// Characteristic pair of a real graph point by central differences.
CharacteristicPair uv_from_graph(const GraphFunction& g, double x, double y, double h = 1e-5);

/// rho = F(zeta).
Complex rho_from_zeta(const CxExpr& F, Complex zeta);

/// Newton inversion of F (solve F(zeta) = rho from the seed). Throws
/// NewtonDivergence after 50 iterations without convergence, CriticalPointOfF
/// when |F'| < 1e-14 at an iterate.
Complex invert_rho(const CxExpr& F, Complex rho, Complex seed);

struct IsothermalReport {
  double max_length_dev = 0.0;   // | |X_rho1|^2 - |X_rho2|^2 | / (1 + |X_rho1|^2)
  double max_angle_dev = 0.0;    // | <X_rho1, X_rho2> | / (1 + |X_rho1|^2)
  double max_phi_rho_dev = 0.0;  // | phi_rho - zeta |
};

/// Verify that rho = F(zeta) are isothermal coordinates: |X_rho1|_L^2 =
/// |X_rho2|_L^2, <X_rho1, X_rho2>_L = 0, and phi_rho = zeta, by finite
/// differences (step h in rho) of the immersion reparametrized through Newton
/// inversion of F. zeta_seed seeds the first inversion; later points chain.
IsothermalReport isothermal_check(const WeierstrassData& data, const CxExpr& F,
                                  std::span<const Complex> rho_grid, Complex zeta_seed,
                                  Complex basepoint, const Offsets& offsets, double h = 1e-4,
                                  PhiSign phi_sign = PhiSign::Plus);

}  // namespace maxsurf
