#include "maxsurf/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "maxsurf/errors.hpp"

namespace maxsurf {

namespace {

double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

CxExpr c(Complex v) { return CxExpr::constant(v); }
CxExpr c(double v) { return CxExpr::constant(Complex(v, 0.0)); }

// Annular sector clear of the unit circle and of the arg-principal branch cut.
DomainSpec canonical_sector() {
  DomainSpec d;
  d.r_min = 1.05;
  d.r_max = 3.0;
  d.angle_min = -3.0 * kPi / 4.0;
  d.angle_max = 3.0 * kPi / 4.0;
  d.n_r = 8;
  d.n_angle = 16;
  return d;
}

CatalogEntry make_catenoid() {
  CxExpr z = CxExpr::variable(0);
  CxExpr one = c(1.0), two = c(2.0);
  CatalogEntry e;
  e.name = "catenoid";
  e.weierstrass.M = c(-1.0) / (two * CxExpr::pow(z, 2));
  e.weierstrass.phase = 0.0;
  e.weierstrass.poles = {PoleDecl{Complex(0.0, 0.0), 2}};
  e.weierstrass.domain = canonical_sector();
  e.weierstrass.name = "catenoid";
  e.F = one / (two * z);
  e.graph = GraphFunction::from_callable(
      [](Complex x, Complex y) { return std::asinh(std::sqrt(x * x + y * y)); },
      ProbeRect{0.5, 1.5, -0.5, 0.5});
  e.we_x = c(-0.5) * (z - one / z);
  e.we_y = c(Complex(0.0, 0.5)) * (z + one / z);
  e.we_phi = -CxExpr::log(z);
  e.ho_x = c(-0.5) * (one / (two * z) - two * z);
  e.ho_y = c(Complex(0.0, 0.5)) * (one / (two * z) + two * z);
  e.ho_phi = [](Complex rho) { return std::log(std::abs(2.0 * rho)); };
  e.phi_mod_pi = false;
  e.graph_relation = [](const Vec3& p) {
    return std::sinh(std::abs(p[2])) - std::hypot(p[0], p[1]);
  };
  // On the r > 1 sector the immersed phi is the negative of the graph height.
  e.graph_phi_sign = -1;
  e.basepoint = Complex(2.0, 0.0);
  Vec3 o = e.closed_position(e.basepoint);
  e.offsets = Offsets{o[0], o[1], o[2]};
  return e;
}

CatalogEntry make_helicoid() {
  CxExpr z = CxExpr::variable(0);
  CxExpr one = c(1.0), two = c(2.0);
  CatalogEntry e;
  e.name = "helicoid";
  e.weierstrass.M = c(Complex(0.0, -1.0)) / (two * CxExpr::pow(z, 2));
  e.weierstrass.phase = 0.0;
  e.weierstrass.poles = {PoleDecl{Complex(0.0, 0.0), 2}};
  e.weierstrass.domain = canonical_sector();
  e.weierstrass.name = "helicoid";
  e.F = c(Complex(0.0, 1.0)) / (two * z);
  // The graph chart keeps x > 0, clear of the tan^{-1}(y/x) singular line.
  e.graph = GraphFunction::from_callable(
      [](Complex x, Complex y) { return kPi / 2.0 + std::atan(y / x); },
      ProbeRect{1.2, 2.2, -0.6, 0.6});
  e.we_x = c(Complex(0.0, -0.5)) * (z - one / z);
  e.we_y = c(-0.5) * (z + one / z);
  e.we_phi = c(Complex(0.0, -1.0)) * CxExpr::log(z);
  e.ho_x = c(0.5) * (one / (two * z) + two * z);
  e.ho_y = c(Complex(0.0, -0.5)) * (one / (two * z) - two * z);
  // Principal-branch wrap of the hodographic log: agreement modulo pi.
  e.ho_phi = [](Complex rho) { return std::arg(-std::conj(rho) / rho) / 2.0; };
  e.phi_mod_pi = true;
  e.graph_relation = [](const Vec3& p) {
    double d = (p[2] - kPi / 2.0) - std::atan2(p[1], p[0]);
    return std::abs(std::remainder(d, kPi));
  };
  e.graph_phi_sign = +1;
  e.basepoint = Complex(2.0, 0.0);
  Vec3 o = e.closed_position(e.basepoint);
  e.offsets = Offsets{o[0], o[1], o[2]};
  return e;
}

}  // namespace

Vec3 CatalogEntry::closed_position(Complex zeta) const {
  return Vec3{we_x.eval(zeta).real(), we_y.eval(zeta).real(), we_phi.eval(zeta).real()};
}

const CatalogEntry& catenoid() {
  static const CatalogEntry e = make_catenoid();
  return e;
}

const CatalogEntry& helicoid() {
  static const CatalogEntry e = make_helicoid();
  return e;
}

VerificationReport cross_check(const CatalogEntry& entry, int samples, std::uint64_t seed) {
  if (samples <= 0) throw std::invalid_argument("cross_check needs samples >= 1");
  if (!entry.weierstrass.domain) throw Error("catalog entry has no domain");

  VerificationReport rep;
  rep.add_meta("entry", entry.name);
  rep.add_meta("samples", std::to_string(samples));
  rep.add_meta("seed", std::to_string(seed));
  rep.add_meta("graph_phi_sign", entry.graph_phi_sign > 0 ? "+1" : "-1");

  const DomainSpec& dom = *entry.weierstrass.domain;
  std::mt19937_64 rng(seed);
  double lr0 = std::log(dom.r_min) + 0.02;
  double lr1 = std::log(dom.r_max) - 0.02;
  double da = 0.04 * (dom.angle_max - dom.angle_min);
  double a0 = dom.angle_min + da;
  double a1 = dom.angle_max - da;

  SurfaceEval ev(entry.weierstrass, entry.basepoint, entry.offsets, PhiSign::Plus, 1e-12);
  CxExpr f_prime = entry.F.derivative(0);

  double res_contour = 0.0, res_graph = 0.0, res_fprime = 0.0, res_hodo = 0.0;
  for (int k = 0; k < samples; ++k) {
    double r = std::exp(lr0 + next_unit(rng) * (lr1 - lr0));
    double t = a0 + next_unit(rng) * (a1 - a0);
    Complex zeta = r * cis(t);

    Vec3 closed = entry.closed_position(zeta);
    Vec3 pinned = ev.position(zeta);
    for (int cdx = 0; cdx < 3; ++cdx)
      res_contour = std::max(res_contour, std::abs(pinned[cdx] - closed[cdx]));

    res_graph = std::max(res_graph, std::abs(entry.graph_relation(pinned)));

    Complex m = eval_M(entry.weierstrass, zeta);
    res_fprime =
        std::max(res_fprime, std::abs(f_prime.eval(zeta) - m) / (1.0 + std::abs(m)));

    Complex rho = entry.F.eval(zeta);
    double hx = entry.ho_x.eval(rho).real();
    double hy = entry.ho_y.eval(rho).real();
    double hphi = entry.ho_phi(rho);
    double dphi = entry.phi_mod_pi ? std::abs(std::remainder(hphi - closed[2], kPi))
                                   : std::abs(hphi - closed[2]);
    res_hodo = std::max({res_hodo, std::abs(hx - closed[0]), std::abs(hy - closed[1]), dphi});
  }

  double res_mse = 0.0;
  const ProbeRect& pr = entry.graph.probe_region();
  for (int k = 0; k < samples; ++k) {
    double x = pr.x_min + next_unit(rng) * (pr.x_max - pr.x_min);
    double y = pr.y_min + next_unit(rng) * (pr.y_max - pr.y_min);
    res_mse = std::max(
        res_mse, std::abs(mse_residual(entry.graph, Complex(x, 0.0), Complex(y, 0.0), 1e-4)));
  }

  rep.add_row("contour_vs_closed_form", res_contour, 1e-8, samples);
  rep.add_row("graph_relation", res_graph, 1e-8, samples);
  rep.add_row("f_prime_matches_m", res_fprime, 1e-12, samples);
  rep.add_row("graph_equation_residual", res_mse, 1e-6, samples);
  rep.add_row("hodograph_vs_zeta_form", res_hodo, 1e-8, samples);
  return rep;
}

}  // namespace maxsurf
