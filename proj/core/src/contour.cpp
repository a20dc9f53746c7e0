#include "maxsurf/contour.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "maxsurf/errors.hpp"

namespace maxsurf {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1]
// (classical QUADPACK coefficients). xk holds the nonnegative abscissae:
// even indices are the Kronrod-only points, odd indices the Gauss points.
constexpr double kXk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

// One Gauss-Kronrod panel of f over [s0, s1]; err receives |K15 - G7|.
template <class F>
Complex gk15_panel(const F& f, double s0, double s1, double& err) {
  double mid = 0.5 * (s0 + s1);
  double hl = 0.5 * (s1 - s0);
  Complex fc = f(mid);
  Complex kron = kWk[7] * fc;
  Complex gauss = kWg[3] * fc;
  for (int k = 0; k < 7; ++k) {
    Complex fp = f(mid + hl * kXk[k]);
    Complex fm = f(mid - hl * kXk[k]);
    kron += kWk[k] * (fp + fm);
    if (k % 2 == 1) gauss += kWg[k / 2] * (fp + fm);
  }
  kron *= hl;
  gauss *= hl;
  err = std::abs(kron - gauss);
  return kron;
}

template <class F>
Complex adaptive(const F& f, double s0, double s1, double tol, int depth) {
  double err = 0.0;
  Complex k = gk15_panel(f, s0, s1, err);
  if (err <= tol || err <= 1e-15 * std::abs(k)) return k;
  if (depth >= 20)
    throw ToleranceNotMet("quadrature error " + std::to_string(err) +
                          " above tolerance after 20 bisection levels");
  double mid = 0.5 * (s0 + s1);
  return adaptive(f, s0, mid, 0.5 * tol, depth + 1) +
         adaptive(f, mid, s1, 0.5 * tol, depth + 1);
}

Complex integrate_segment(const CxExpr& expr, Complex a, Complex b, double tol) {
  if (a == b) return Complex(0.0, 0.0);
  Complex dir = b - a;
  auto f = [&](double s) { return expr.eval(a + s * dir) * dir; };
  return adaptive(f, 0.0, 1.0, tol, 0);
}

Complex integrate_arc(const CxExpr& expr, Complex center, double radius, double t0,
                      double t1, double tol) {
  if (t0 == t1) return Complex(0.0, 0.0);
  auto f = [&](double t) {
    Complex e = radius * cis(t);
    return expr.eval(center + e) * Complex(0.0, 1.0) * e;
  };
  return adaptive(f, t0, t1, tol, 0);
}

double point_segment_distance(Complex p, Complex a, Complex b) {
  Complex ab = b - a;
  double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  double t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

double wrap_angle(double t) {
  double w = std::fmod(t, 2.0 * kPi);
  if (w < 0.0) w += 2.0 * kPi;
  return w;
}

}  // namespace

PathSpec PathSpec::segment(Complex a, Complex b) {
  PathSpec p;
  p.kind = Kind::Segment;
  p.a = a;
  p.b = b;
  return p;
}

PathSpec PathSpec::polyline(std::vector<Complex> points) {
  PathSpec p;
  p.kind = Kind::Polyline;
  p.points = std::move(points);
  return p;
}

PathSpec PathSpec::arc(Complex center, double radius, double angle0, double angle1,
                       int orientation) {
  PathSpec p;
  p.kind = Kind::Arc;
  p.center = center;
  p.radius = radius;
  p.angle0 = angle0;
  p.angle1 = angle1;
  p.orientation = orientation;
  return p;
}

void PathSpec::validate() const {
  auto finite = [](Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  };
  switch (kind) {
    case Kind::Segment:
      if (!finite(a) || !finite(b)) throw Error("segment endpoints must be finite");
      return;
    case Kind::Polyline:
      if (points.size() < 2) throw Error("polyline needs at least 2 points");
      for (Complex p : points)
        if (!finite(p)) throw Error("polyline points must be finite");
      return;
    case Kind::Arc:
      if (!finite(center) || !(radius > 0.0) || !std::isfinite(radius))
        throw Error("arc needs a finite center and positive radius");
      if (!std::isfinite(angle0) || !std::isfinite(angle1) ||
          std::abs(angle1 - angle0) > 2.0 * kPi + 1e-12)
        throw Error("arc angular span must be finite and at most 2*pi");
      if (orientation != 1 && orientation != -1)
        throw Error("arc orientation must be +1 or -1");
      return;
  }
  throw Error("corrupt path kind");
}

double PathSpec::min_distance_to(Complex p) const {
  switch (kind) {
    case Kind::Segment:
      return point_segment_distance(p, a, b);
    case Kind::Polyline: {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i + 1 < points.size(); ++i)
        best = std::min(best, point_segment_distance(p, points[i], points[i + 1]));
      return best;
    }
    case Kind::Arc: {
      double lo = std::min(angle0, angle1);
      double hi = std::max(angle0, angle1);
      Complex w = p - center;
      double r = std::abs(w);
      if (r > 0.0) {
        double span = hi - lo;
        double rel = wrap_angle(std::arg(w) - lo);
        if (span >= 2.0 * kPi - 1e-15 || rel <= span) return std::abs(r - radius);
      } else if (hi - lo >= 2.0 * kPi - 1e-15) {
        return radius;
      }
      Complex e0 = center + radius * cis(lo);
      Complex e1 = center + radius * cis(hi);
      double d = std::min(std::abs(p - e0), std::abs(p - e1));
      if (r == 0.0) d = std::min(d, radius);
      return d;
    }
  }
  throw Error("corrupt path kind");
}

Complex integrate(const CxExpr& expr, const PathSpec& path, double tol,
                  std::span<const Complex> singular_points) {
  path.validate();
  if (!(tol > 0.0)) throw Error("integration tolerance must be positive");
  for (Complex s : singular_points) {
    if (path.min_distance_to(s) < kPathClearance)
      throw PathThroughSingularity("integration path within " +
                                   std::to_string(kPathClearance) +
                                   " of a singular point");
  }
  switch (path.kind) {
    case PathSpec::Kind::Segment:
      return integrate_segment(expr, path.a, path.b, tol);
    case PathSpec::Kind::Polyline: {
      Complex total(0.0, 0.0);
      double each = tol / static_cast<double>(path.points.size() - 1);
      for (std::size_t i = 0; i + 1 < path.points.size(); ++i)
        total += integrate_segment(expr, path.points[i], path.points[i + 1], each);
      return total;
    }
    case PathSpec::Kind::Arc: {
      double t0 = path.orientation > 0 ? path.angle0 : path.angle1;
      double t1 = path.orientation > 0 ? path.angle1 : path.angle0;
      return integrate_arc(expr, path.center, path.radius, t0, t1, tol);
    }
  }
  throw Error("corrupt path kind");
}

Complex integrate_chain(const CxExpr& expr, std::span<const PathSpec> paths, double tol,
                        std::span<const Complex> singular_points) {
  if (paths.empty()) return Complex(0.0, 0.0);
  Complex total(0.0, 0.0);
  double each = tol / static_cast<double>(paths.size());
  for (const PathSpec& p : paths) total += integrate(expr, p, each, singular_points);
  return total;
}

AntiderivativeField antiderivative_grid(const CxExpr& expr, Complex basepoint,
                                        const SampleGrid& grid, double tol,
                                        std::span<const Complex> singular_points) {
  const std::size_t n = grid.nodes.size();
  if (n == 0 || grid.n_r < 1 || grid.n_angle < 1 ||
      n != static_cast<std::size_t>(grid.n_r) * grid.n_angle)
    throw Error("malformed sample grid");

  AntiderivativeField field;
  field.basepoint = basepoint;
  const double qnan = std::numeric_limits<double>::quiet_NaN();
  field.values.assign(n, Complex(qnan, qnan));
  field.parent.assign(n, -1);
  field.edge_values.assign(n, Complex(0.0, 0.0));

  int root = -1;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    if (!grid.active[k]) continue;
    double d = std::abs(grid.nodes[k] - basepoint);
    if (d < best) {
      best = d;
      root = static_cast<int>(k);
    }
  }
  if (root < 0) throw DisconnectedGrid("grid has no active nodes");
  field.root = root;

  field.values[root] =
      grid.nodes[root] == basepoint
          ? Complex(0.0, 0.0)
          : integrate(expr, PathSpec::segment(basepoint, grid.nodes[root]), tol,
                      singular_points);

  std::vector<std::uint8_t> visited(n, 0);
  visited[static_cast<std::size_t>(root)] = 1;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    int k = queue.front();
    queue.pop_front();
    int i = k / grid.n_angle;
    int j = k % grid.n_angle;
    const int di[4] = {-1, 1, 0, 0};
    const int dj[4] = {0, 0, -1, 1};
    for (int q = 0; q < 4; ++q) {
      int ni = i + di[q];
      int nj = j + dj[q];
      if (ni < 0 || ni >= grid.n_r || nj < 0 || nj >= grid.n_angle) continue;
      int nk = grid.index(ni, nj);
      std::size_t nku = static_cast<std::size_t>(nk);
      if (!grid.active[nku] || visited[nku]) continue;
      Complex edge = integrate(expr, PathSpec::segment(grid.nodes[k], grid.nodes[nku]),
                               tol, singular_points);
      field.values[nku] = field.values[static_cast<std::size_t>(k)] + edge;
      field.parent[nku] = k;
      field.edge_values[nku] = edge;
      visited[nku] = 1;
      queue.push_back(nk);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (grid.active[k] && !visited[k])
      throw DisconnectedGrid("active grid nodes are not 4-connected");
  }
  return field;
}

Complex residue(const CxExpr& expr, Complex pole_location, double radius, double tol) {
  if (!(radius > 0.0)) throw Error("residue radius must be positive");
  Complex loop =
      integrate(expr, PathSpec::arc(pole_location, radius, 0.0, 2.0 * kPi), tol);
  return loop / Complex(0.0, 2.0 * kPi);
}

PeriodReport period_report(const CxExpr& M, const PoleDecl& pole, double radius,
                           double tol) {
  CxExpr w = CxExpr::variable(0);
  CxExpr one = CxExpr::constant(Complex(1.0, 0.0));
  CxExpr i_const = CxExpr::constant(Complex(0.0, 1.0));
  CxExpr two = CxExpr::constant(Complex(2.0, 0.0));
  CxExpr w2 = CxExpr::pow(w, 2);
  const CxExpr integrands[3] = {M * (one + w2), i_const * M * (one - w2), two * M * w};

  PeriodReport r;
  Complex* out[3] = {&r.x, &r.y, &r.phi};
  for (int k = 0; k < 3; ++k)
    *out[k] = integrate(integrands[k],
                        PathSpec::arc(pole.location, radius, 0.0, 2.0 * kPi), tol);
  r.x_single_valued = std::abs(r.x.real()) <= PeriodReport::kSingleValuedTol;
  r.y_single_valued = std::abs(r.y.real()) <= PeriodReport::kSingleValuedTol;
  r.phi_single_valued = std::abs(r.phi.real()) <= PeriodReport::kSingleValuedTol;
  return r;
}

}  // namespace maxsurf
