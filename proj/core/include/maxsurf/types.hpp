#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace maxsurf {

using Complex = std::complex<double>;

/// Point of the ambient space R^{2,1} as (x, y, phi).
using Vec3 = std::array<double, 3>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Lorentzian inner product of signature (+, +, -).
inline double lorentz_dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] - a[2] * b[2];
}

inline double lorentz_norm_sq(const Vec3& a) { return lorentz_dot(a, a); }

/// e^{i t} as a complex double.
inline Complex cis(double t) { return Complex(std::cos(t), std::sin(t)); }

/// Integration constants (x0, y0, phi0) of the representation.
struct Offsets {
  double x0 = 0.0;
  double y0 = 0.0;
  double phi0 = 0.0;
};

/// Sign choice for the third integrand: phi -> -phi is a symmetry of the
/// construction, so both signs produce maximal surfaces.
enum class PhiSign { Plus, Minus };

}  // namespace maxsurf
