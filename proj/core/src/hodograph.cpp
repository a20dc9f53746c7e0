#include "maxsurf/hodograph.hpp"

#include <cmath>
#include <random>

#include "maxsurf/contour.hpp"
#include "maxsurf/errors.hpp"

namespace maxsurf {

CharacteristicPair uv_from_zeta(Complex zeta, Complex zeta_bar) {
  Complex den = Complex(1.0, 0.0) + zeta * zeta_bar;
  if (std::abs(den) < 1e-15)
    throw DegenerateDenominator("1 + zeta*zeta_bar vanished");
  return CharacteristicPair{zeta / den, zeta_bar / den};
}

std::pair<Complex, Complex> zeta_from_uv(Complex u, Complex v, bool outer_branch) {
  Complex w = Complex(1.0, 0.0) - 4.0 * u * v;
  if (w.imag() == 0.0 && w.real() <= 0.0)
    throw BranchCutHit("1 - 4uv landed on the branch cut (-inf, 0]");
  Complex s = std::sqrt(w);  // principal: Re s > 0 off the cut
  if (outer_branch) {
    if (u == Complex(0.0, 0.0) || v == Complex(0.0, 0.0))
      throw DegenerateDenominator("outer branch requires u != 0 and v != 0");
    return {(Complex(1.0, 0.0) + s) / (2.0 * v), (Complex(1.0, 0.0) + s) / (2.0 * u)};
  }
  Complex den = Complex(1.0, 0.0) + s;
  return {2.0 * u / den, 2.0 * v / den};
}

namespace {

double next_unit(std::mt19937_64& rng) {
  // 53 uniform bits -> [0, 1); identical on every conforming platform.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool probe_spacelike_impl(const std::function<Complex(Complex, Complex)>& fn,
                          const ProbeRect& region, int probes, std::uint64_t seed,
                          double h) {
  std::mt19937_64 rng(seed);
  for (int k = 0; k < probes; ++k) {
    double x = region.x_min + next_unit(rng) * (region.x_max - region.x_min);
    double y = region.y_min + next_unit(rng) * (region.y_max - region.y_min);
    Complex gx, gy;
    try {
      gx = (fn(Complex(x + h, 0), Complex(y, 0)) - fn(Complex(x - h, 0), Complex(y, 0))) /
           (2.0 * h);
      gy = (fn(Complex(x, 0), Complex(y + h, 0)) - fn(Complex(x, 0), Complex(y - h, 0))) /
           (2.0 * h);
    } catch (const Error&) {
      return false;
    }
    if (std::abs(gx.imag()) > 1e-8 || std::abs(gy.imag()) > 1e-8) return false;
    if (gx.real() * gx.real() + gy.real() * gy.real() >= 1.0) return false;
  }
  return true;
}

}  // namespace

GraphFunction GraphFunction::from_expr(const CxExpr& expr_xy, const ProbeRect& region) {
  if (!expr_xy.valid()) throw Error("empty graph expression");
  GraphFunction g;
  g.expr_ = expr_xy;
  g.fn_ = [e = expr_xy](Complex x, Complex y) {
    const Complex vars[2] = {x, y};
    return e.eval(std::span<const Complex>(vars, 2));
  };
  g.region_ = region;
  g.spacelike_ = probe_spacelike_impl(g.fn_, region, 100, kSpacelikeProbeSeed, 1e-5);
  return g;
}

GraphFunction GraphFunction::from_callable(std::function<Complex(Complex, Complex)> fn,
                                           const ProbeRect& region, bool probe_spacelike) {
  if (!fn) throw Error("empty graph callable");
  GraphFunction g;
  g.fn_ = std::move(fn);
  g.region_ = region;
  g.spacelike_ =
      probe_spacelike && probe_spacelike_impl(g.fn_, region, 100, kSpacelikeProbeSeed, 1e-5);
  return g;
}

Complex GraphFunction::operator()(Complex x, Complex y) const {
  if (!fn_) throw Error("graph function is empty");
  return fn_(x, y);
}

GraphFunction GraphFunction::wick_rotated_x() const {
  if (!fn_) throw Error("graph function is empty");
  if (expr_) {
    CxExpr rotated = expr_->scale_variable(0, Complex(0.0, 1.0));
    GraphFunction g;
    g.expr_ = rotated;
    g.fn_ = [e = rotated](Complex x, Complex y) {
      const Complex vars[2] = {x, y};
      return e.eval(std::span<const Complex>(vars, 2));
    };
    g.region_ = region_;
    g.spacelike_ = false;  // complex-valued on real arguments in general
    return g;
  }
  GraphFunction g;
  g.fn_ = [f = fn_](Complex x, Complex y) { return f(Complex(0.0, 1.0) * x, y); };
  g.region_ = region_;
  g.spacelike_ = false;
  return g;
}

bool recheck_spacelike(const GraphFunction& g, int probes, std::uint64_t seed, double h) {
  return probe_spacelike_impl([&g](Complex x, Complex y) { return g(x, y); },
                              g.probe_region(), probes, seed, h);
}

namespace {

struct GraphJet {
  Complex fx, fy, fxx, fyy, fxy;
};

GraphJet graph_jet(const GraphFunction& g, Complex x, Complex y, double h) {
  const Complex hx(h, 0.0);
  Complex fpp = g(x + hx, y + hx), fpm = g(x + hx, y - hx);
  Complex fmp = g(x - hx, y + hx), fmm = g(x - hx, y - hx);
  Complex fp0 = g(x + hx, y), fm0 = g(x - hx, y);
  Complex f0p = g(x, y + hx), f0m = g(x, y - hx);
  Complex f00 = g(x, y);
  GraphJet j;
  j.fx = (fp0 - fm0) / (2.0 * h);
  j.fy = (f0p - f0m) / (2.0 * h);
  j.fxx = (fp0 - 2.0 * f00 + fm0) / (h * h);
  j.fyy = (f0p - 2.0 * f00 + f0m) / (h * h);
  j.fxy = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
  return j;
}

}  // namespace

Complex mse_residual(const GraphFunction& g, Complex x, Complex y, double h) {
  GraphJet j = graph_jet(g, x, y, h);
  return (1.0 - j.fx * j.fx) * j.fyy + 2.0 * j.fx * j.fy * j.fxy +
         (1.0 - j.fy * j.fy) * j.fxx;
}

Complex bie_residual(const GraphFunction& g, Complex x, Complex y, double h) {
  GraphJet j = graph_jet(g, x, y, h);
  return (1.0 + j.fx * j.fx) * j.fyy - 2.0 * j.fx * j.fy * j.fxy -
         (1.0 - j.fy * j.fy) * j.fxx;
}

Complex minse_residual(const GraphFunction& g, Complex x, Complex y, double h) {
  GraphJet j = graph_jet(g, x, y, h);
  return (1.0 + j.fx * j.fx) * j.fyy - 2.0 * j.fx * j.fy * j.fxy +
         (1.0 + j.fy * j.fy) * j.fxx;
}

std::pair<Complex, Complex> wick_check(const GraphFunction& g, Complex x, Complex y,
                                       double h) {
  Complex lhs = mse_residual(g.wick_rotated_x(), x, y, h);
  Complex rhs = bie_residual(g, Complex(0.0, 1.0) * x, y, h);
  return {lhs, rhs};
}

namespace {

// Wirtinger d/dzeta by the 4-point cross stencil of a complex-valued map
// evaluated at zeta +- he and zeta +- i*he.
Complex wirtinger_d(const std::function<Complex(Complex)>& f, Complex zeta, double he) {
  Complex dx = (f(zeta + he) - f(zeta - he)) / (2.0 * he);
  Complex dy = (f(zeta + Complex(0.0, he)) - f(zeta - Complex(0.0, he))) / (2.0 * he);
  return 0.5 * (dx - Complex(0.0, 1.0) * dy);
}

Complex compatibility_residual_impl(const std::function<Complex(Complex)>& z_rel,
                                    Complex zeta, double h) {
  double he = h * std::max(1.0, std::abs(zeta));
  auto zbar_rel = [&z_rel](Complex s) { return std::conj(z_rel(s)); };
  Complex z_zeta = wirtinger_d(z_rel, zeta, he);
  Complex zbar_zeta = wirtinger_d(zbar_rel, zeta, he);
  return zeta * zeta * zbar_zeta - z_zeta;
}

}  // namespace

Complex hodograph_compatibility_residual(const CxExpr& F, Complex zeta, double h,
                                         double tol) {
  if (!F.valid()) throw Error("empty expression");
  CxExpr Fp = F.derivative(0);
  CxExpr w = CxExpr::variable(0);
  CxExpr integrand = CxExpr::pow(w, 2) * Fp;
  Complex F0 = F.eval(zeta);
  // Reconstruction relative to its value at zeta; integration constants drop
  // out of the Wirtinger derivatives anyway.
  auto z_rel = [&](Complex s) {
    Complex hol = s == zeta ? Complex(0.0, 0.0)
                            : integrate(integrand, PathSpec::segment(zeta, s), tol);
    return std::conj(F.eval(s) - F0) + hol;
  };
  return compatibility_residual_impl(z_rel, zeta, h);
}

Complex hodograph_compatibility_residual(const WeierstrassData& data, Complex zeta,
                                         double h, double tol) {
  if (!data.M.valid()) throw Error("datum has no expression");
  require_clear_of_poles(zeta, data.poles, kPathClearance);
  Complex ph = cis(data.phase);
  CxExpr w = CxExpr::variable(0);
  CxExpr integrand = CxExpr::pow(w, 2) * data.M;
  std::vector<Complex> locs;
  for (const auto& p : data.poles) locs.push_back(p.location);
  auto z_rel = [&](Complex s) {
    if (s == zeta) return Complex(0.0, 0.0);
    PathSpec hop = PathSpec::segment(zeta, s);
    Complex dF = ph * integrate(data.M, hop, tol, std::span<const Complex>(locs));
    Complex hol = ph * integrate(integrand, hop, tol, std::span<const Complex>(locs));
    return std::conj(dF) + hol;
  };
  return compatibility_residual_impl(z_rel, zeta, h);
}

std::pair<Complex, Complex> jacobian_identity(const GraphFunction& g, Complex x, Complex y,
                                              double h) {
  GraphJet j = graph_jet(g, x, y, h);
  Complex second = (j.fxy * j.fxy - j.fxx * j.fyy) / 4.0;

  auto u_t = [&](Complex px, Complex py) {
    GraphJet q = graph_jet(g, px, py, h);
    return 0.5 * (q.fy - Complex(0.0, 1.0) * q.fx);
  };
  auto v_t = [&](Complex px, Complex py) {
    GraphJet q = graph_jet(g, px, py, h);
    return -0.5 * (q.fy + Complex(0.0, 1.0) * q.fx);
  };

  // Chart-displaced central differences: a xi-step H moves (x, y) by
  // (-iH/2, H/2), an eta-step by (-iH/2, -H/2). The outer step stays at or
  // above 1e-3 so the nested-difference noise floor stays below the relative
  // contract of the identity.
  double H = std::max(1e-3, h);
  Complex dxi_x(0.0, -0.5 * H), dxi_y(0.5 * H, 0.0);
  Complex deta_x(0.0, -0.5 * H), deta_y(-0.5 * H, 0.0);

  Complex u_xi = (u_t(x + dxi_x, y + dxi_y) - u_t(x - dxi_x, y - dxi_y)) / (2.0 * H);
  Complex u_eta = (u_t(x + deta_x, y + deta_y) - u_t(x - deta_x, y - deta_y)) / (2.0 * H);
  Complex v_xi = (v_t(x + dxi_x, y + dxi_y) - v_t(x - dxi_x, y - dxi_y)) / (2.0 * H);
  Complex v_eta = (v_t(x + deta_x, y + deta_y) - v_t(x - deta_x, y - deta_y)) / (2.0 * H);

  Complex first = u_xi * v_eta - u_eta * v_xi;
  return {first, second};
}

CharacteristicPair uv_from_graph(const GraphFunction& g, double x, double y, double h) {
  GraphJet j = graph_jet(g, Complex(x, 0.0), Complex(y, 0.0), h);
  return CharacteristicPair{0.5 * (j.fx + Complex(0.0, 1.0) * j.fy),
                            0.5 * (j.fx - Complex(0.0, 1.0) * j.fy)};
}

Complex rho_from_zeta(const CxExpr& F, Complex zeta) {
  if (!F.valid()) throw Error("empty expression");
  return F.eval(zeta);
}

Complex invert_rho(const CxExpr& F, Complex rho, Complex seed) {
  if (!F.valid()) throw Error("empty expression");
  CxExpr Fp = F.derivative(0);
  Complex z = seed;
  for (int it = 0; it < 50; ++it) {
    Complex r = F.eval(z) - rho;
    if (std::abs(r) <= 1e-14 * (1.0 + std::abs(rho))) return z;
    Complex d = Fp.eval(z);
    if (std::abs(d) < 1e-14)
      throw CriticalPointOfF("Newton iterate landed at a critical point of F");
    Complex step = r / d;
    z -= step;
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z))) {
      if (std::abs(F.eval(z) - rho) <= 1e-12 * (1.0 + std::abs(rho))) return z;
    }
  }
  throw NewtonDivergence("Newton inversion of F did not converge in 50 iterations");
}

IsothermalReport isothermal_check(const WeierstrassData& data, const CxExpr& F,
                                  std::span<const Complex> rho_grid, Complex zeta_seed,
                                  Complex basepoint, const Offsets& offsets, double h,
                                  PhiSign phi_sign) {
  if (!F.valid()) throw Error("empty expression");
  SurfaceEval eval(data, basepoint, offsets, phi_sign, 1e-12);
  IsothermalReport rep;
  Complex seed = zeta_seed;
  for (Complex rho : rho_grid) {
    Complex zeta = invert_rho(F, rho, seed);
    seed = zeta;
    SurfaceEval::Anchor anchor = eval.at(zeta);
    double he = h * std::max(1.0, std::abs(rho));
    // Positions at the four rho-stencil points, each reached by inverting F
    // near zeta and hopping the anchor.
    auto pos_at = [&](Complex rho_s) {
      Complex zs = invert_rho(F, rho_s, zeta);
      return eval.position(eval.shift(anchor, zs));
    };
    Vec3 pr = pos_at(rho + he), pl = pos_at(rho - he);
    Vec3 pu = pos_at(rho + Complex(0.0, he)), pd = pos_at(rho - Complex(0.0, he));
    Vec3 x1, x2;
    for (int c = 0; c < 3; ++c) {
      x1[c] = (pr[c] - pl[c]) / (2.0 * he);
      x2[c] = (pu[c] - pd[c]) / (2.0 * he);
    }
    double n1 = lorentz_norm_sq(x1);
    double n2 = lorentz_norm_sq(x2);
    double denom = 1.0 + std::abs(n1);
    rep.max_length_dev = std::max(rep.max_length_dev, std::abs(n1 - n2) / denom);
    rep.max_angle_dev = std::max(rep.max_angle_dev, std::abs(lorentz_dot(x1, x2)) / denom);
    Complex phi_rho = 0.5 * (Complex((pr[2] - pl[2]) / (2.0 * he), 0.0) -
                             Complex(0.0, 1.0) * Complex((pu[2] - pd[2]) / (2.0 * he), 0.0));
    rep.max_phi_rho_dev = std::max(rep.max_phi_rho_dev, std::abs(phi_rho - zeta));
  }
  return rep;
}

}  // namespace maxsurf
