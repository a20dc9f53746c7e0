// maxsurf: construct maximal surfaces in Lorentz-Minkowski space from a
// meromorphic datum, verify the construction's identities numerically, and
// export meshes, sample tables, and verification reports.
//
// Exit codes: 0 = success and all requested checks passed; 1 = checks ran and
// at least one failed (reports are still written); 2 = usage or
// configuration error.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "maxsurf/maxsurf.hpp"

namespace {

using namespace maxsurf;

double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open output file: " + path);
  out << content;
  out.flush();
  if (!out) throw Error("failed while writing: " + path);
}

Complex parse_complex_literal(const std::string& text) {
  CxExpr e = parse_expr(text);  // throws ExprParseError on bad input
  return e.eval(Complex(0.0, 0.0));
}

PoleDecl parse_pole_spec(const std::string& text) {
  std::size_t colon = text.rfind(':');
  if (colon == std::string::npos || colon + 1 >= text.size())
    throw Error("pole spec must look like LOCATION:ORDER, e.g. 0:2 or 1+2i:1");
  PoleDecl p;
  p.location = parse_complex_literal(text.substr(0, colon));
  char* end = nullptr;
  long order = std::strtol(text.c_str() + colon + 1, &end, 10);
  if (end == nullptr || *end != '\0' || order < 1)
    throw Error("pole order must be a positive integer");
  p.order = static_cast<int>(order);
  return p;
}

int resolve_jobs(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("MAXSURF_JOBS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<int>(v);
  }
  return 0;  // hardware concurrency
}

// ---------------------------------------------------------------------------
// Shared configuration plumbing

struct DataConfig {
  std::string example_name;
  std::string expr_text;
  std::vector<std::string> pole_specs;
  std::vector<double> domain4;        // rmin,rmax,amin,amax
  std::vector<std::string> excludes;  // "x,y,radius" each
  int n_r = 0;
  int n_angle = 0;
  std::string basepoint_text;
  std::vector<double> offsets3;
};

void add_data_options(CLI::App* cmd, DataConfig& cfg, bool with_grid) {
  auto* ex = cmd->add_option("--example", cfg.example_name,
                             "Catalog entry name (catenoid or helicoid)");
  auto* de = cmd->add_option("--data-expr", cfg.expr_text,
                             "Datum expression in zeta, e.g. \"-1/(2*zeta^2)\"");
  ex->excludes(de);
  de->excludes(ex);
  cmd->add_option("--pole", cfg.pole_specs,
                  "Declared pole LOCATION:ORDER (repeatable), e.g. 0:2");
  cmd->add_option("--domain", cfg.domain4,
                  "Sector r_min,r_max,angle_min,angle_max (radians)")
      ->expected(4)
      ->delimiter(',');
  cmd->add_option("--exclude", cfg.excludes,
                  "Exclusion disk x,y,radius (repeatable)");
  if (with_grid) {
    cmd->add_option("--nr", cfg.n_r, "Radial sample count (>= 2)");
    cmd->add_option("--nangle", cfg.n_angle, "Angular sample count (>= 2)");
  }
  cmd->add_option("--basepoint", cfg.basepoint_text,
                  "Integration basepoint as a complex literal (default: catalog "
                  "basepoint or sector anchor)");
  cmd->add_option("--offsets", cfg.offsets3,
                  "Integration constants x0,y0,phi0 (default: catalog offsets or 0,0,0)")
      ->expected(3)
      ->delimiter(',');
}

struct ResolvedData {
  WeierstrassData data;
  const CatalogEntry* entry = nullptr;  // non-null when selected from the catalog
  Complex basepoint;
  Offsets offsets;
};

const CatalogEntry& entry_by_name(const std::string& name) {
  if (name == "catenoid") return catenoid();
  if (name == "helicoid") return helicoid();
  throw Error("unknown catalog entry \"" + name + "\" (try: catenoid, helicoid)");
}

ResolvedData resolve_data(const DataConfig& cfg, bool need_domain) {
  ResolvedData r;
  if (!cfg.example_name.empty()) {
    const CatalogEntry& e = entry_by_name(cfg.example_name);
    r.entry = &e;
    r.data = e.weierstrass;
    r.basepoint = e.basepoint;
    r.offsets = e.offsets;
  } else if (!cfg.expr_text.empty()) {
    r.data.M = parse_expr(cfg.expr_text);
    r.data.name = "custom";
    for (const auto& ps : cfg.pole_specs) r.data.poles.push_back(parse_pole_spec(ps));
    r.offsets = Offsets{0.0, 0.0, 0.0};
  } else {
    throw Error("select the datum with --example NAME or --data-expr EXPR");
  }

  if (!cfg.domain4.empty()) {
    DomainSpec d;
    if (r.data.domain) d = *r.data.domain;  // keep grid counts unless overridden
    d.r_min = cfg.domain4[0];
    d.r_max = cfg.domain4[1];
    d.angle_min = cfg.domain4[2];
    d.angle_max = cfg.domain4[3];
    if (d.n_r < 2) d.n_r = 16;
    if (d.n_angle < 2) d.n_angle = 32;
    r.data.domain = d;
  }
  if (!cfg.excludes.empty()) {
    if (!r.data.domain) throw Error("--exclude needs a domain (catalog sector or --domain)");
    for (const auto& text : cfg.excludes) {
      double x = 0.0, y = 0.0, rad = 0.0;
      if (std::sscanf(text.c_str(), "%lf,%lf,%lf", &x, &y, &rad) != 3)
        throw Error("--exclude expects x,y,radius (got \"" + text + "\")");
      r.data.domain->exclusions.push_back(ExclusionDisk{Complex(x, y), rad});
    }
  }
  if (cfg.n_r > 0) {
    if (!r.data.domain) throw Error("--nr needs a domain (catalog sector or --domain)");
    r.data.domain->n_r = cfg.n_r;
  }
  if (cfg.n_angle > 0) {
    if (!r.data.domain) throw Error("--nangle needs a domain (catalog sector or --domain)");
    r.data.domain->n_angle = cfg.n_angle;
  }
  if (need_domain && !r.data.domain)
    throw Error("this subcommand needs a domain: use --example or pass --domain");
  if (r.data.domain) r.data.domain->validate();

  if (!cfg.basepoint_text.empty()) {
    r.basepoint = parse_complex_literal(cfg.basepoint_text);
  } else if (!r.entry) {
    if (r.data.domain) {
      const DomainSpec& d = *r.data.domain;
      r.basepoint = std::sqrt(d.r_min * d.r_max) *
                    cis(0.5 * (d.angle_min + d.angle_max));
    } else {
      r.basepoint = Complex(1.0, 0.0);
    }
  }
  if (!cfg.offsets3.empty())
    r.offsets = Offsets{cfg.offsets3[0], cfg.offsets3[1], cfg.offsets3[2]};

  validate(r.data);  // pole verification + holomorphy spot checks
  return r;
}

PhiSign parse_phi_sign(const std::string& text) {
  if (text == "plus") return PhiSign::Plus;
  if (text == "minus") return PhiSign::Minus;
  throw Error("--phi-sign must be plus or minus");
}

std::vector<Complex> sector_samples(const DomainSpec& dom, int count,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double lr0 = std::log(dom.r_min) + 0.02;
  double lr1 = std::log(dom.r_max) - 0.02;
  double da = 0.04 * (dom.angle_max - dom.angle_min);
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(pts.size()) < count) {
    double rr = std::exp(lr0 + next_unit(rng) * (lr1 - lr0));
    double t = dom.angle_min + da + next_unit(rng) * (dom.angle_max - dom.angle_min - 2 * da);
    Complex z = rr * cis(t);
    if (dom.excluded(z)) continue;
    pts.push_back(z);
  }
  return pts;
}

std::string domain_to_string(const DomainSpec& d) {
  std::ostringstream out;
  out << "r in (" << fmt17(d.r_min) << ", " << fmt17(d.r_max) << "), angle in ("
      << fmt17(d.angle_min) << ", " << fmt17(d.angle_max) << "), grid " << d.n_r << "x"
      << d.n_angle;
  if (!d.exclusions.empty()) out << ", " << d.exclusions.size() << " exclusion disk(s)";
  return out.str();
}

void emit_report(const VerificationReport& rep, const std::string& out_path) {
  std::string text = export_report(rep);
  std::cout << text;
  if (!out_path.empty()) write_file(out_path, text);
}

// ---------------------------------------------------------------------------
// example

int run_example(const std::string& name, const std::string& out_path) {
  std::ostringstream out;
  std::vector<const CatalogEntry*> entries;
  if (name.empty()) {
    entries = {&catenoid(), &helicoid()};
  } else {
    entries = {&entry_by_name(name)};
  }
  for (const CatalogEntry* e : entries) {
    out << "entry " << e->name << "\n";
    out << "  datum       " << e->weierstrass.M.to_string() << "\n";
    out << "  primitive   " << e->F.to_string() << "\n";
    for (const auto& p : e->weierstrass.poles)
      out << "  pole        (" << fmt17(p.location.real()) << ", "
          << fmt17(p.location.imag()) << ") order " << p.order << "\n";
    out << "  sector      " << domain_to_string(*e->weierstrass.domain) << "\n";
    out << "  basepoint   (" << fmt17(e->basepoint.real()) << ", "
        << fmt17(e->basepoint.imag()) << ")\n";
    out << "  offsets     (" << fmt17(e->offsets.x0) << ", " << fmt17(e->offsets.y0)
        << ", " << fmt17(e->offsets.phi0) << ")\n";
    out << "  closed x    Re " << e->we_x.to_string() << "\n";
    out << "  closed y    Re " << e->we_y.to_string() << "\n";
    out << "  closed phi  Re " << e->we_phi.to_string() << "\n";
    out << "  graph sign  " << (e->graph_phi_sign > 0 ? "+1" : "-1") << "\n";
  }
  std::cout << out.str();
  if (!out_path.empty()) write_file(out_path, out.str());
  return 0;
}

// ---------------------------------------------------------------------------
// mesh

struct MeshCmd {
  DataConfig data;
  std::string out_path;
  std::string csv_path;
  std::string phi_sign = "plus";
  int jobs = 0;
  double fd_step = 1e-4;
  double tol_integration = 1e-12;
};

int run_mesh(const MeshCmd& cfg) {
  ResolvedData rd = resolve_data(cfg.data, /*need_domain=*/true);
  PhiSign sign = parse_phi_sign(cfg.phi_sign);
  std::optional<Complex> bp;
  if (!cfg.data.basepoint_text.empty() || rd.entry) bp = rd.basepoint;
  MeshData mesh = build_mesh(rd.data, *rd.data.domain, rd.offsets, bp, sign,
                             resolve_jobs(cfg.jobs), cfg.fd_step, cfg.tol_integration);
  write_file(cfg.out_path, export_obj(mesh));
  if (!cfg.csv_path.empty()) write_file(cfg.csv_path, export_csv(mesh.vertices));

  double max_h = 0.0;
  for (const auto& v : mesh.vertices)
    max_h = std::max(max_h, std::abs(v.mean_curvature));
  std::cout << "mesh " << rd.data.name << ": " << mesh.vertices.size() << " vertices, "
            << mesh.faces.size() << " faces\n";
  std::cout << "max |mean curvature| = " << fmt17(max_h) << "\n";
  std::cout << "wrote " << cfg.out_path << "\n";
  if (!cfg.csv_path.empty()) std::cout << "wrote " << cfg.csv_path << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyCmd {
  DataConfig data;
  std::string out_path;
  std::string phi_sign = "plus";
  int samples = 50;
  std::uint64_t seed = 20240801;
  double fd_step = 1e-4;
  // Tolerance overrides; negative = keep default.
  double tol_closed_form = -1.0;
  double tol_graph_relation = -1.0;
  double tol_fprime = -1.0;
  double tol_graph_equation = -1.0;
  double tol_hodograph = -1.0;
  double tol_mean_curvature = 1e-4;
  double tol_normal = 1e-9;
  double tol_conformality = 1e-5;
  double tol_metric = 1e-4;
  double tol_symmetry = 1e-12;
};

int run_verify(const VerifyCmd& cfg) {
  if (cfg.samples < 1) throw Error("--samples must be >= 1");
  ResolvedData rd = resolve_data(cfg.data, /*need_domain=*/true);
  PhiSign sign = parse_phi_sign(cfg.phi_sign);

  VerificationReport rep;
  if (rd.entry) {
    rep = cross_check(*rd.entry, cfg.samples, cfg.seed);
    auto override_tol = [&rep](const std::string& name, double tol) {
      if (tol < 0.0) return;
      for (auto& row : rep.rows)
        if (row.name == name) row.tolerance = tol;
    };
    override_tol("contour_vs_closed_form", cfg.tol_closed_form);
    override_tol("graph_relation", cfg.tol_graph_relation);
    override_tol("f_prime_matches_m", cfg.tol_fprime);
    override_tol("graph_equation_residual", cfg.tol_graph_equation);
    override_tol("hodograph_vs_zeta_form", cfg.tol_hodograph);
  } else {
    rep.add_meta("entry", rd.data.name);
    rep.add_meta("samples", std::to_string(cfg.samples));
    rep.add_meta("seed", std::to_string(cfg.seed));
  }
  rep.add_meta("tool_version", kVersion);
  rep.add_meta("domain", domain_to_string(*rd.data.domain));
  rep.add_meta("phi_sign", cfg.phi_sign);

  // Surface-level checks at seeded sector samples.
  std::vector<Complex> pts = sector_samples(*rd.data.domain, cfg.samples, cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  SurfaceEval ev(rd.data, rd.basepoint, rd.offsets, sign, 1e-12);
  double res_h = 0.0, res_norm = 0.0, res_conf = 0.0, res_metric = 0.0;
  double spacelike_violation = 0.0;
  double lambda_min = std::numeric_limits<double>::infinity();
  long h_kept = 0;
  for (Complex z : pts) {
    SurfaceEval::Anchor a = ev.at(z);
    FundamentalForms f = ev.forms(a, cfg.fd_step);
    // Roundoff model of the FD mean curvature: second-difference noise
    // eps (1+|X|) / h_e^2 is amplified by the normal's magnitude and 1/(2E),
    // both of which blow up toward |zeta| = 1 where the metric degenerates.
    // Samples whose modeled noise floor exceeds half the tolerance cannot
    // attest |H| at this tolerance either way and are excluded from the
    // mean-curvature row (count recorded in the metadata).
    Vec3 pos = ev.position(a);
    double x_inf = std::max({std::abs(pos[0]), std::abs(pos[1]), std::abs(pos[2])});
    double n_inf = (1.0 + std::norm(z)) / std::abs(1.0 - std::norm(z));
    double he = cfg.fd_step * std::max(1.0, std::abs(z));
    double eps = std::numeric_limits<double>::epsilon();
    double h_noise = 4.0 * eps * (1.0 + x_inf) * (1.0 + n_inf) /
                     (he * he * 2.0 * std::max(f.E, 1e-300));
    if (h_noise <= 0.5 * cfg.tol_mean_curvature) {
      res_h = std::max(res_h, std::abs(mean_curvature(f)));
      ++h_kept;
    }
    Vec3 n = gauss_map(z);
    if (sign == PhiSign::Minus) n[2] = -n[2];
    res_norm = std::max(res_norm, std::abs(lorentz_dot(n, n) + 1.0));
    res_conf = std::max(res_conf,
                        std::max(std::abs(f.E - f.G), std::abs(f.F)) / (1.0 + f.E));
    double lam = conformal_factor(rd.data, z);
    lambda_min = std::min(lambda_min, lam);
    // The finite-difference metric carries the full |M|^2 (1-|zeta|^2)^2
    // normalization: four times the half-normalized conformal factor.
    res_metric = std::max(res_metric, std::abs(f.E - 4.0 * lam) / (1.0 + f.E));
    spacelike_violation = std::max(spacelike_violation,
                                   std::max(-std::min(f.E, 0.0),
                                            -std::min(f.E * f.G - f.F * f.F, 0.0)));
  }
  rep.add_meta("mean_curvature_fd_trusted",
               std::to_string(h_kept) + " of " + std::to_string(cfg.samples));
  rep.add_row("mean_curvature_max", res_h, cfg.tol_mean_curvature, h_kept);
  rep.add_row("normal_lorentz_norm", res_norm, cfg.tol_normal, cfg.samples);
  rep.add_row("conformality", res_conf, cfg.tol_conformality, cfg.samples);
  rep.add_row("metric_vs_conformal_factor", res_metric, cfg.tol_metric, cfg.samples);
  rep.add_row("spacelike", spacelike_violation, 0.0, cfg.samples);

  {
    // phi -> -phi symmetry: same (x, y), phi mirrored about phi0.
    SurfaceEval plus(rd.data, rd.basepoint, rd.offsets, PhiSign::Plus, 1e-12);
    SurfaceEval minus(rd.data, rd.basepoint, rd.offsets, PhiSign::Minus, 1e-12);
    double res_sym = 0.0;
    int count = std::min(cfg.samples, 10);
    for (int k = 0; k < count; ++k) {
      Vec3 a = plus.position(pts[static_cast<std::size_t>(k)]);
      Vec3 b = minus.position(pts[static_cast<std::size_t>(k)]);
      res_sym = std::max({res_sym, std::abs(a[0] - b[0]), std::abs(a[1] - b[1]),
                          std::abs((a[2] - rd.offsets.phi0) + (b[2] - rd.offsets.phi0))});
    }
    rep.add_row("phi_sign_symmetry", res_sym, cfg.tol_symmetry, count);
  }

  rep.add_meta("lambda_sq_min", fmt17(lambda_min));
  for (const auto& pole : rd.data.poles) {
    std::string key = "period_at_(" + fmt17(pole.location.real()) + "," +
                      fmt17(pole.location.imag()) + ")";
    try {
      PeriodReport pr = period_report(rd.data, pole, 0.25);
      rep.add_meta(key + "_re", fmt17(pr.x.real()) + " " + fmt17(pr.y.real()) + " " +
                                    fmt17(pr.phi.real()));
      rep.add_meta(key + "_single_valued",
                   std::string(pr.x_single_valued ? "x" : "-") +
                       (pr.y_single_valued ? "y" : "-") +
                       (pr.phi_single_valued ? "p" : "-"));
    } catch (const Error& err) {
      rep.add_meta(key, std::string("unavailable: ") + err.what());
    }
  }

  emit_report(rep, cfg.out_path);
  return rep.overall_pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// hodograph

struct HodographCmd {
  DataConfig data;
  std::string out_path;
  int samples = 50;
  std::uint64_t seed = 20240801;
  double tol_lemma = 1e-8;
  double tol_roundtrip = 1e-10;
  double tol_wick = 1e-6;
  double tol_isothermal = 1e-5;
  double tol_phi_rho = 1e-6;
  double tol_jacobian = 1e-5;
};

CxExpr random_poly_xy(std::mt19937_64& rng, int degree) {
  CxExpr x = CxExpr::variable(0);
  CxExpr y = CxExpr::variable(1);
  CxExpr sum = CxExpr::constant(Complex(0.0, 0.0));
  for (int i = 0; i <= degree; ++i) {
    for (int j = 0; i + j <= degree; ++j) {
      double c = 2.0 * next_unit(rng) - 1.0;
      sum = sum + CxExpr::constant(Complex(c, 0.0)) *
                      CxExpr::pow(x, i) * CxExpr::pow(y, j);
    }
  }
  return sum;
}

double wick_deviation(std::mt19937_64& rng, int trials) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    CxExpr poly = random_poly_xy(rng, 4);
    GraphFunction g = GraphFunction::from_expr(poly, ProbeRect{0.2, 0.8, 0.2, 0.8});
    double px = 0.2 + 0.6 * next_unit(rng);
    double py = 0.2 + 0.6 * next_unit(rng);
    auto [lhs, rhs] = wick_check(g, Complex(px, 0.0), Complex(py, 0.0), 1e-4);
    worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
  }
  return worst;
}

double uv_roundtrip_deviation(std::mt19937_64& rng, int trials) {
  double worst = 0.0;
  int done = 0;
  while (done < trials) {
    double r = 5.0 * next_unit(rng);
    if (std::abs(1.0 - r * r) < 1e-3) continue;
    Complex z = r * cis(2.0 * kPi * next_unit(rng));
    Complex zb = std::conj(z);
    CharacteristicPair uv = uv_from_zeta(z, zb);
    auto [z2, zb2] = zeta_from_uv(uv.u, uv.v, /*outer_branch=*/r > 1.0);
    worst = std::max({worst, std::abs(z2 - z), std::abs(zb2 - zb)});
    ++done;
  }
  return worst;
}

int run_hodograph(const HodographCmd& cfg) {
  if (cfg.samples < 1) throw Error("--samples must be >= 1");
  ResolvedData rd = resolve_data(cfg.data, /*need_domain=*/true);

  VerificationReport rep;
  rep.add_meta("entry", rd.entry ? rd.entry->name : rd.data.name);
  rep.add_meta("samples", std::to_string(cfg.samples));
  rep.add_meta("seed", std::to_string(cfg.seed));
  rep.add_meta("tool_version", kVersion);

  std::vector<Complex> pts = sector_samples(*rd.data.domain, cfg.samples, cfg.seed);

  double res_lemma = 0.0;
  for (Complex z : pts) {
    Complex r = rd.entry ? hodograph_compatibility_residual(rd.entry->F, z)
                         : hodograph_compatibility_residual(rd.data, z);
    res_lemma = std::max(res_lemma, std::abs(r));
  }
  rep.add_row("compatibility_residual", res_lemma, cfg.tol_lemma, cfg.samples);

  std::mt19937_64 rng(cfg.seed ^ 0xabcdef12345ULL);
  rep.add_row("uv_roundtrip", uv_roundtrip_deviation(rng, 500), cfg.tol_roundtrip, 500);
  rep.add_row("wick_identity", wick_deviation(rng, 50), cfg.tol_wick, 50);

  if (rd.entry) {
    const GraphFunction& graph = rd.entry->graph;
    const ProbeRect& pr = graph.probe_region();
    double res_band = 0.0, res_conj = 0.0, res_jac = 0.0;
    for (int k = 0; k < cfg.samples; ++k) {
      double x = pr.x_min + next_unit(rng) * (pr.x_max - pr.x_min);
      double y = pr.y_min + next_unit(rng) * (pr.y_max - pr.y_min);
      CharacteristicPair uv = uv_from_graph(graph, x, y);
      res_conj = std::max(res_conj, std::abs(uv.v - std::conj(uv.u)));
      Complex fouruv = 4.0 * uv.u * uv.v;
      res_band = std::max({res_band, std::abs(fouruv.imag()), -fouruv.real(),
                           fouruv.real() - 1.0});
      auto [jd, jf] = jacobian_identity(graph, Complex(x, 0.0), Complex(y, 0.0));
      res_jac = std::max(res_jac, std::abs(jd - jf) / (1.0 + std::abs(jf)));
    }
    rep.add_row("conjugate_pair", res_conj, 1e-10, cfg.samples);
    rep.add_row("spacelike_band", std::max(res_band, 0.0), 0.0, cfg.samples);
    rep.add_row("jacobian_identity", res_jac, cfg.tol_jacobian, cfg.samples);

    // rho-grid from a serpentine sector walk (consecutive points stay close,
    // keeping the Newton inversion seeds in-basin).
    const DomainSpec& dom = *rd.data.domain;
    std::vector<Complex> rho_grid;
    Complex newton_seed = rd.basepoint;
    for (int i = 0; i < 5; ++i) {
      double rr = dom.r_min + (dom.r_max - dom.r_min) * (0.15 + 0.7 * i / 4.0);
      for (int j = 0; j < 10; ++j) {
        int jj = (i % 2 == 0) ? j : 9 - j;
        double t = dom.angle_min +
                   (dom.angle_max - dom.angle_min) * (0.15 + 0.7 * jj / 9.0);
        Complex z = rr * cis(t);
        if (rho_grid.empty()) newton_seed = z;  // keeps the first inversion in-basin
        rho_grid.push_back(rd.entry->F.eval(z));
      }
    }
    IsothermalReport iso = isothermal_check(rd.data, rd.entry->F, rho_grid,
                                            newton_seed, rd.basepoint, rd.offsets);
    rep.add_row("isothermal_length", iso.max_length_dev, cfg.tol_isothermal,
                static_cast<long>(rho_grid.size()));
    rep.add_row("isothermal_angle", iso.max_angle_dev, cfg.tol_isothermal,
                static_cast<long>(rho_grid.size()));
    rep.add_row("phi_rho_equals_zeta", iso.max_phi_rho_dev, cfg.tol_phi_rho,
                static_cast<long>(rho_grid.size()));
  }

  emit_report(rep, cfg.out_path);
  return rep.overall_pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// family

struct FamilyCmd {
  DataConfig data;
  std::string out_path;
  std::string mesh_prefix;
  double theta = kPi / 2.0;
  int steps = 8;
  int samples = 20;
  std::uint64_t seed = 20240801;
  int jobs = 0;
  double fd_step = 1e-4;
  double tol_lambda = 1e-9;
  double tol_metric = 1e-4;
};

int run_family(const FamilyCmd& cfg) {
  if (cfg.samples < 1) throw Error("--samples must be >= 1");
  if (cfg.steps < 1) throw Error("--steps must be >= 1");
  ResolvedData rd = resolve_data(cfg.data, /*need_domain=*/true);

  FamilySpec spec;
  spec.base = rd.data;
  spec.theta = cfg.theta;
  spec.steps = cfg.steps;
  std::vector<Complex> probes = sector_samples(*rd.data.domain, cfg.samples, cfg.seed);
  SweepResult sweep =
      isometry_sweep(spec, probes, rd.basepoint, rd.offsets, cfg.fd_step, 1e-12);

  VerificationReport rep;
  rep.add_meta("entry", rd.entry ? rd.entry->name : rd.data.name);
  rep.add_meta("theta", fmt17(cfg.theta));
  rep.add_meta("steps", std::to_string(cfg.steps));
  rep.add_meta("samples", std::to_string(cfg.samples));
  rep.add_meta("seed", std::to_string(cfg.seed));
  rep.add_meta("tool_version", kVersion);
  rep.add_row("conformal_factor_invariance", sweep.max_conformal_dev, cfg.tol_lambda,
              cfg.samples * cfg.steps);
  rep.add_row("fd_metric_invariance", sweep.max_metric_dev, cfg.tol_metric,
              cfg.samples * cfg.steps);

  if (!cfg.mesh_prefix.empty()) {
    for (int k = 0; k <= cfg.steps; ++k) {
      WeierstrassData member = rotate_data(spec.base, sweep.thetas[static_cast<std::size_t>(k)]);
      MeshData mesh = build_mesh(member, *member.domain, rd.offsets, rd.basepoint,
                                 PhiSign::Plus, resolve_jobs(cfg.jobs), cfg.fd_step, 1e-12);
      char suffix[32];
      std::snprintf(suffix, sizeof(suffix), "_%03d.obj", k);
      write_file(cfg.mesh_prefix + suffix, export_obj(mesh));
    }
    std::cout << "wrote " << (cfg.steps + 1) << " meshes at " << cfg.mesh_prefix
              << "_*.obj\n";
  }

  emit_report(rep, cfg.out_path);
  return rep.overall_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximal surfaces in Lorentz-Minkowski space from a meromorphic datum"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string example_name, example_out;
  CLI::App* c_example =
      app.add_subcommand("example", "List the built-in catalog entries");
  c_example->add_option("--name", example_name, "Show one entry (catenoid or helicoid)");
  c_example->add_option("--out", example_out, "Also write the listing to a file");

  MeshCmd mesh_cfg;
  CLI::App* c_mesh = app.add_subcommand("mesh", "Sample a surface and export an OBJ mesh");
  add_data_options(c_mesh, mesh_cfg.data, /*with_grid=*/true);
  c_mesh->add_option("--out", mesh_cfg.out_path, "Output OBJ path")->required();
  c_mesh->add_option("--csv", mesh_cfg.csv_path, "Also write per-vertex samples as CSV");
  c_mesh->add_option("--phi-sign", mesh_cfg.phi_sign, "plus | minus (default plus)");
  c_mesh->add_option("--jobs", mesh_cfg.jobs, "Worker threads (default: hardware)");
  c_mesh->add_option("--fd-step", mesh_cfg.fd_step, "Finite-difference step (default 1e-4)");
  c_mesh->add_option("--tol-integration", mesh_cfg.tol_integration,
                     "Quadrature tolerance (default 1e-12)");

  VerifyCmd verify_cfg;
  CLI::App* c_verify =
      app.add_subcommand("verify", "Run the verification suite and write a report");
  add_data_options(c_verify, verify_cfg.data, /*with_grid=*/false);
  c_verify->add_option("--out", verify_cfg.out_path, "Report output path");
  c_verify->add_option("--phi-sign", verify_cfg.phi_sign, "plus | minus (default plus)");
  c_verify->add_option("--samples", verify_cfg.samples, "Sample count (default 50)");
  c_verify->add_option("--seed", verify_cfg.seed, "Sampling seed");
  c_verify->add_option("--fd-step", verify_cfg.fd_step, "Finite-difference step");
  c_verify->add_option("--tol-closed-form", verify_cfg.tol_closed_form,
                       "Override: contour vs closed form (default 1e-8)");
  c_verify->add_option("--tol-graph-relation", verify_cfg.tol_graph_relation,
                       "Override: graph relation (default 1e-8)");
  c_verify->add_option("--tol-fprime", verify_cfg.tol_fprime,
                       "Override: F' = M (default 1e-12)");
  c_verify->add_option("--tol-graph-equation", verify_cfg.tol_graph_equation,
                       "Override: graph equation residual (default 1e-6)");
  c_verify->add_option("--tol-hodograph", verify_cfg.tol_hodograph,
                       "Override: hodographic vs zeta closed form (default 1e-8)");
  c_verify->add_option("--tol-mean-curvature", verify_cfg.tol_mean_curvature,
                       "Mean curvature bound (default 1e-4)");
  c_verify->add_option("--tol-normal", verify_cfg.tol_normal,
                       "Normal normalization bound (default 1e-9)");
  c_verify->add_option("--tol-conformality", verify_cfg.tol_conformality,
                       "Conformality bound (default 1e-5)");
  c_verify->add_option("--tol-metric", verify_cfg.tol_metric,
                       "Metric vs conformal factor bound (default 1e-4)");
  c_verify->add_option("--tol-symmetry", verify_cfg.tol_symmetry,
                       "phi sign symmetry bound (default 1e-12)");

  HodographCmd hodo_cfg;
  CLI::App* c_hodo = app.add_subcommand(
      "hodograph", "Characteristic/hodograph coordinate checks and PDE identities");
  add_data_options(c_hodo, hodo_cfg.data, /*with_grid=*/false);
  c_hodo->add_option("--out", hodo_cfg.out_path, "Report output path");
  c_hodo->add_option("--samples", hodo_cfg.samples, "Sample count (default 50)");
  c_hodo->add_option("--seed", hodo_cfg.seed, "Sampling seed");
  c_hodo->add_option("--tol-lemma", hodo_cfg.tol_lemma,
                     "Compatibility residual bound (default 1e-8)");
  c_hodo->add_option("--tol-roundtrip", hodo_cfg.tol_roundtrip,
                     "uv round-trip bound (default 1e-10)");
  c_hodo->add_option("--tol-wick", hodo_cfg.tol_wick,
                     "Wick identity bound (default 1e-6)");
  c_hodo->add_option("--tol-isothermal", hodo_cfg.tol_isothermal,
                     "Isothermality bound (default 1e-5)");
  c_hodo->add_option("--tol-phi-rho", hodo_cfg.tol_phi_rho,
                     "phi_rho = zeta bound (default 1e-6)");
  c_hodo->add_option("--tol-jacobian", hodo_cfg.tol_jacobian,
                     "Jacobian identity bound (default 1e-5)");

  FamilyCmd family_cfg;
  CLI::App* c_family = app.add_subcommand(
      "family", "Associated-family sweep: isometry checks and optional meshes");
  add_data_options(c_family, family_cfg.data, /*with_grid=*/true);
  c_family->add_option("--out", family_cfg.out_path, "Report output path");
  c_family->add_option("--mesh-prefix", family_cfg.mesh_prefix,
                       "Write one OBJ per theta at PREFIX_XXX.obj");
  c_family->add_option("--theta", family_cfg.theta, "Sweep endpoint (default pi/2)");
  c_family->add_option("--steps", family_cfg.steps, "Sweep steps (default 8)");
  c_family->add_option("--samples", family_cfg.samples, "Probe count (default 20)");
  c_family->add_option("--seed", family_cfg.seed, "Sampling seed");
  c_family->add_option("--jobs", family_cfg.jobs, "Worker threads for meshes");
  c_family->add_option("--fd-step", family_cfg.fd_step, "Finite-difference step");
  c_family->add_option("--tol-lambda", family_cfg.tol_lambda,
                       "Conformal factor invariance bound (default 1e-9)");
  c_family->add_option("--tol-metric", family_cfg.tol_metric,
                       "FD metric invariance bound (default 1e-4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_example->parsed()) return run_example(example_name, example_out);
    if (c_mesh->parsed()) return run_mesh(mesh_cfg);
    if (c_verify->parsed()) return run_verify(verify_cfg);
    if (c_hodo->parsed()) return run_hodograph(hodo_cfg);
    if (c_family->parsed()) return run_family(family_cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
