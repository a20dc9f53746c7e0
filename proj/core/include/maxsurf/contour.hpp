#pragma once

#include <span>
#include <vector>

#include "maxsurf/cx_expr.hpp"
#include "maxsurf/domain.hpp"
#include "maxsurf/types.hpp"

namespace maxsurf {

/// Minimum clearance between an integration path and any declared singularity.
inline constexpr double kPathClearance = 1e-6;

/// An oriented integration path: straight segment, polyline, or circular arc.
struct PathSpec {
  enum class Kind { Segment, Polyline, Arc };

  Kind kind = Kind::Segment;
  // Segment
  Complex a, b;
  // Polyline
  std::vector<Complex> points;
  // Arc: center + radius, traversed from angle0 to angle1 (radians);
  // orientation -1 swaps the endpoints. |angle1 - angle0| <= 2*pi.
  Complex center;
  double radius = 0.0;
  double angle0 = 0.0;
  double angle1 = 0.0;
  int orientation = +1;

  static PathSpec segment(Complex a, Complex b);
  static PathSpec polyline(std::vector<Complex> points);
  static PathSpec arc(Complex center, double radius, double angle0, double angle1,
                      int orientation = +1);

  /// Throws Error on malformed specs (arc span > 2*pi, < 2 polyline points...).
  void validate() const;

  /// Exact Euclidean distance from p to the path.
  double min_distance_to(Complex p) const;
};

/// Contour integral of expr along the path with adaptive Gauss-Kronrod 7/15
/// quadrature (recursive bisection, max 20 levels). `singular_points` are
/// validated against the kPathClearance distance before integrating.
/// Throws PathThroughSingularity, ToleranceNotMet.
Complex integrate(const CxExpr& expr, const PathSpec& path, double tol = 1e-12,
                  std::span<const Complex> singular_points = {});

/// Integral along a chain of paths (endpoint continuity is the caller's
/// responsibility).
Complex integrate_chain(const CxExpr& expr, std::span<const PathSpec> paths,
                        double tol = 1e-12, std::span<const Complex> singular_points = {});

/// Accumulated antiderivative values of an expression over a sample grid:
/// values[k] = integral from the basepoint to node k along a spanning tree of
/// grid edges. If the basepoint coincides exactly with a grid node, that
/// node's value is exactly 0.
struct AntiderivativeField {
  Complex basepoint;
  int root = -1;                    // root node index
  std::vector<Complex> values;      // per node; inactive nodes hold NaN
  std::vector<int> parent;          // spanning-tree parent; -1 at root/inactive
  std::vector<Complex> edge_values; // integral along parent -> node edge
};

/// Build the antiderivative field. The spanning tree is grown from the node
/// nearest the basepoint in deterministic (index-ordered breadth-first) order
/// over 4-adjacent active nodes. Throws DisconnectedGrid if any active node is
/// unreachable.
AntiderivativeField antiderivative_grid(const CxExpr& expr, Complex basepoint,
                                        const SampleGrid& grid, double tol = 1e-12,
                                        std::span<const Complex> singular_points = {});

/// Residue of expr at an isolated singularity: (1/2*pi*i) * circle integral.
/// The circle of the given radius must enclose no other singularity.
Complex residue(const CxExpr& expr, Complex pole_location, double radius,
                double tol = 1e-12);

/// Periods 2*pi*i * Res of the three coordinate integrands M(1+w^2),
/// i*M(1-w^2), 2*M*w around one declared pole. A coordinate of the immersion
/// is single-valued around the pole iff the real part of its period vanishes.
struct PeriodReport {
  Complex x, y, phi;
  bool x_single_valued = false;
  bool y_single_valued = false;
  bool phi_single_valued = false;

  static constexpr double kSingleValuedTol = 1e-9;
};

PeriodReport period_report(const CxExpr& M, const PoleDecl& pole, double radius = 0.25,
                           double tol = 1e-12);

}  // namespace maxsurf
