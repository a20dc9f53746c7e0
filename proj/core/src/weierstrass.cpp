#include "maxsurf/weierstrass.hpp"

#include <cmath>

#include "maxsurf/errors.hpp"

namespace maxsurf {

void validate(const WeierstrassData& data) {
  if (!data.M.valid()) throw Error("datum has no expression");
  if (!std::isfinite(data.phase)) throw Error("datum phase must be finite");
  if (data.domain) data.domain->validate();
  for (const auto& p : data.poles) {
    if (!check_pole(data.M, p))
      throw Error("declared pole at (" + std::to_string(p.location.real()) + ", " +
                  std::to_string(p.location.imag()) + ") of order " +
                  std::to_string(p.order) + " failed verification");
  }
  // Holomorphy spot checks: d/dx and -i d/dy of M must agree (Wirtinger
  // d/dzbar = 0) at probe points clear of the declared poles.
  const double h = 1e-5;
  int checked = 0;
  for (int k = 0; k < 16 && checked < 6; ++k) {
    Complex z = (data.domain ? std::sqrt(data.domain->r_min * data.domain->r_max) : 1.5) *
                cis(2.0 * kPi * k / 16.0 + 0.37);
    if (data.domain && !data.domain->contains(z)) continue;
    bool clear = true;
    for (const auto& p : data.poles)
      if (std::abs(z - p.location) < 0.05) clear = false;
    if (!clear) continue;
    Complex dx, dy;
    try {
      dx = (data.M.eval(z + h) - data.M.eval(z - h)) / (2.0 * h);
      dy = (data.M.eval(z + Complex(0.0, h)) - data.M.eval(z - Complex(0.0, h))) /
           Complex(0.0, 2.0 * h);
    } catch (const Error&) {
      continue;  // probe hit an undeclared hazard; try the next one
    }
    double scale = std::abs(dx) + std::abs(dy) + 1.0;
    if (std::abs(dx - dy) > 1e-4 * scale)
      throw Error("expression failed the holomorphy spot check near (" +
                  std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")");
    ++checked;
  }
  if (checked == 0)
    throw Error("no usable probe points for the holomorphy spot check");
}

Complex eval_M(const WeierstrassData& data, Complex zeta) {
  if (!data.M.valid()) throw Error("datum has no expression");
  require_clear_of_poles(zeta, data.poles, kSingularityProximity);
  return cis(data.phase) * data.M.eval(zeta);
}

SurfaceEval::SurfaceEval(WeierstrassData data, Complex basepoint, Offsets offsets,
                         PhiSign phi_sign, double tol)
    : data_(std::move(data)),
      basepoint_(basepoint),
      offsets_(offsets),
      phi_sign_(phi_sign),
      tol_(tol) {
  if (!data_.M.valid()) throw Error("datum has no expression");
  if (!(tol_ > 0.0)) throw Error("tolerance must be positive");
  CxExpr w = CxExpr::variable(0);
  CxExpr one = CxExpr::constant(Complex(1.0, 0.0));
  CxExpr i_const = CxExpr::constant(Complex(0.0, 1.0));
  CxExpr two = CxExpr::constant(Complex(2.0, 0.0));
  CxExpr w2 = CxExpr::pow(w, 2);
  integrand_[0] = data_.M * (one + w2);
  integrand_[1] = i_const * data_.M * (one - w2);
  integrand_[2] = two * data_.M * w;
  pole_locs_.reserve(data_.poles.size());
  for (const auto& p : data_.poles) pole_locs_.push_back(p.location);
  if (data_.domain && !data_.domain->contains(basepoint_))
    throw DomainViolation("basepoint outside the attached domain");
  require_clear_of_poles(basepoint_, data_.poles, kPathClearance);
}

SurfaceEval::Anchor SurfaceEval::at(Complex zeta) const {
  if (data_.domain && !data_.domain->contains(zeta))
    throw DomainViolation("evaluation point outside the attached domain");
  Anchor a;
  a.zeta = zeta;
  a.acc = {Complex(0, 0), Complex(0, 0), Complex(0, 0)};
  if (zeta == basepoint_) return a;

  std::vector<PathSpec> chain;
  if (data_.domain) {
    // Stay inside the annular sector: swing along the basepoint's circle to
    // the target angle, then walk the ray. Keeps routes homotopic for every
    // target, so multivalued coordinates are evaluated consistently.
    double r0 = std::abs(basepoint_);
    double t0 = std::arg(basepoint_);
    double t1 = std::arg(zeta);
    while (t1 - t0 > kPi) t1 -= 2.0 * kPi;
    while (t0 - t1 > kPi) t1 += 2.0 * kPi;
    Complex corner = r0 * cis(t1);
    if (t1 != t0) chain.push_back(PathSpec::arc(Complex(0, 0), r0, t0, t1));
    if (corner != zeta) chain.push_back(PathSpec::segment(corner, zeta));
  } else {
    chain.push_back(PathSpec::segment(basepoint_, zeta));
  }
  for (int k = 0; k < 3; ++k)
    a.acc[k] = integrate_chain(integrand_[k], chain, tol_,
                               std::span<const Complex>(pole_locs_));
  return a;
}

SurfaceEval::Anchor SurfaceEval::shift(const Anchor& from, Complex zeta2) const {
  Anchor a;
  a.zeta = zeta2;
  if (zeta2 == from.zeta) {
    a.acc = from.acc;
    return a;
  }
  PathSpec hop = PathSpec::segment(from.zeta, zeta2);
  for (int k = 0; k < 3; ++k)
    a.acc[k] = from.acc[k] + integrate(integrand_[k], hop, tol_,
                                       std::span<const Complex>(pole_locs_));
  return a;
}

Vec3 SurfaceEval::position(const Anchor& a) const {
  Complex ph = cis(data_.phase);
  double sign = phi_sign_ == PhiSign::Plus ? 1.0 : -1.0;
  return Vec3{offsets_.x0 + (ph * a.acc[0]).real(),
              offsets_.y0 + (ph * a.acc[1]).real(),
              offsets_.phi0 + sign * (ph * a.acc[2]).real()};
}

Vec3 SurfaceEval::position(Complex zeta) const { return position(at(zeta)); }

namespace {

// Domain membership with absolute slack delta: the sector is inflated
// radially and angularly, exclusion disks are shrunk.
bool contains_with_slack(const DomainSpec& d, Complex z, double delta) {
  double r = std::abs(z);
  if (r < d.r_min - delta || r > d.r_max + delta) return false;
  double span = d.angle_max - d.angle_min;
  if (span < 2.0 * kPi - 1e-15) {
    double ang_slack = delta / std::max(d.r_min, 1e-12);
    double rel = std::fmod(std::arg(z) - (d.angle_min - ang_slack), 2.0 * kPi);
    if (rel < 0.0) rel += 2.0 * kPi;
    if (rel > span + 2.0 * ang_slack) return false;
  }
  for (const auto& disk : d.exclusions)
    if (std::abs(z - disk.center) < disk.radius - delta) return false;
  return true;
}

}  // namespace

FundamentalForms SurfaceEval::forms(const Anchor& a, double h) const {
  if (!(h > 0.0)) throw Error("finite-difference step must be positive");
  const Complex zeta = a.zeta;
  const double he = h * std::max(1.0, std::abs(zeta));
  const double center_side = std::abs(zeta) - 1.0;
  const double slack = 3.0 * he;

  Vec3 p[3][3];  // p[du+1][dv+1]
  for (int du = -1; du <= 1; ++du) {
    for (int dv = -1; dv <= 1; ++dv) {
      Complex z = zeta + Complex(du * he, dv * he);
      if ((std::abs(z) - 1.0) * center_side <= 0.0)
        throw StencilOutOfDomain("stencil crosses |zeta| = 1");
      if (data_.domain && !contains_with_slack(*data_.domain, z, slack))
        throw StencilOutOfDomain("stencil leaves the attached domain");
      require_clear_of_poles(z, data_.poles, kPathClearance);
      p[du + 1][dv + 1] = (du == 0 && dv == 0) ? position(a) : position(shift(a, z));
    }
  }

  Vec3 xu, xv, xuu, xvv, xuv;
  for (int c = 0; c < 3; ++c) {
    xu[c] = (p[2][1][c] - p[0][1][c]) / (2.0 * he);
    xv[c] = (p[1][2][c] - p[1][0][c]) / (2.0 * he);
    xuu[c] = (p[2][1][c] - 2.0 * p[1][1][c] + p[0][1][c]) / (he * he);
    xvv[c] = (p[1][2][c] - 2.0 * p[1][1][c] + p[1][0][c]) / (he * he);
    xuv[c] = (p[2][2][c] - p[2][0][c] - p[0][2][c] + p[0][0][c]) / (4.0 * he * he);
  }

  Vec3 n = gauss_map(zeta);
  if (phi_sign_ == PhiSign::Minus) n[2] = -n[2];

  FundamentalForms f;
  f.E = lorentz_dot(xu, xu);
  f.F = lorentz_dot(xu, xv);
  f.G = lorentz_dot(xv, xv);
  f.e = lorentz_dot(xuu, n);
  f.f = lorentz_dot(xuv, n);
  f.g = lorentz_dot(xvv, n);
  return f;
}

Vec3 immersion(const WeierstrassData& data, Complex basepoint, const Offsets& offsets,
               Complex zeta, PhiSign phi_sign, double tol) {
  return SurfaceEval(data, basepoint, offsets, phi_sign, tol).position(zeta);
}

double conformal_factor(const WeierstrassData& data, Complex zeta) {
  if (!data.M.valid()) throw Error("datum has no expression");
  if (data.domain && !data.domain->contains(zeta))
    throw DomainViolation("evaluation point outside the attached domain");
  require_clear_of_poles(zeta, data.poles, kSingularityProximity);
  // |e^{i phase} M| = |M|: the family phase never enters, exactly.
  double m = std::abs(data.M.eval(zeta));
  double t = m * (1.0 - std::norm(zeta)) / 2.0;
  return t * t;
}

Vec3 gauss_map(Complex zeta) {
  double n = std::norm(zeta);
  if (std::abs(std::abs(zeta) - 1.0) < 1e-9)
    throw LightlikeGaussMap("Gauss map degenerates on |zeta| = 1");
  double d = 1.0 - n;
  return Vec3{2.0 * zeta.real() / d, 2.0 * zeta.imag() / d, -((1.0 + n) / d)};
}

Vec3 stereographic(Complex tau) {
  double n = std::norm(tau);
  if (std::abs(std::abs(tau) - 1.0) < 1e-9)
    throw LightlikeGaussMap("inverse stereographic projection degenerates on |tau| = 1");
  double d = n - 1.0;
  return Vec3{(-2.0 * tau.real()) / d, (-2.0 * tau.imag()) / d, (n + 1.0) / d};
}

FundamentalForms fundamental_forms(const WeierstrassData& data, Complex basepoint,
                                   const Offsets& offsets, Complex zeta, double h,
                                   PhiSign phi_sign, double tol) {
  SurfaceEval eval(data, basepoint, offsets, phi_sign, tol);
  return eval.forms(eval.at(zeta), h);
}

double mean_curvature(const FundamentalForms& forms) {
  double det = forms.E * forms.G - forms.F * forms.F;
  if (std::abs(det) < 1e-18)
    throw DegenerateMetric("EG - F^2 vanished; mean curvature undefined");
  return (forms.e * forms.G - 2.0 * forms.f * forms.F + forms.g * forms.E) / (2.0 * det);
}

PeriodReport period_report(const WeierstrassData& data, const PoleDecl& pole,
                           double radius) {
  if (!data.M.valid()) throw Error("datum has no expression");
  if (!(radius > 0.0)) throw Error("loop radius must be positive");
  for (const auto& other : data.poles) {
    if (other.location == pole.location) continue;
    double d = std::abs(other.location - pole.location);
    if (std::abs(d - radius) < kPathClearance)
      throw PathThroughSingularity("period loop passes through another declared pole");
    if (d < radius)
      throw Error("period loop would enclose a second declared pole");
  }
  PeriodReport r = period_report(data.M, pole, radius, 1e-12);
  Complex ph = cis(data.phase);
  r.x *= ph;
  r.y *= ph;
  r.phi *= ph;
  r.x_single_valued = std::abs(r.x.real()) <= PeriodReport::kSingleValuedTol;
  r.y_single_valued = std::abs(r.y.real()) <= PeriodReport::kSingleValuedTol;
  r.phi_single_valued = std::abs(r.phi.real()) <= PeriodReport::kSingleValuedTol;
  return r;
}

}  // namespace maxsurf
