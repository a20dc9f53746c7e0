#include "maxsurf/surf_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#include "maxsurf/errors.hpp"
#include "maxsurf/parallel.hpp"

namespace maxsurf {

namespace {

bool sector_contains_ignoring_exclusions(const DomainSpec& d, Complex z) {
  double r = std::abs(z);
  if (r < d.r_min || r > d.r_max) return false;
  double span = d.angle_max - d.angle_min;
  if (span >= 2.0 * kPi - 1e-15) return true;
  double rel = std::fmod(std::arg(z) - d.angle_min, 2.0 * kPi);
  if (rel < 0.0) rel += 2.0 * kPi;
  return rel <= span + 1e-15;
}

bool covered_by_exclusion(const DomainSpec& d, Complex z) {
  for (const auto& disk : d.exclusions)
    if (std::abs(z - disk.center) < disk.radius) return true;
  return false;
}

void append17(std::string& out, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

}  // namespace

MeshData build_mesh(const WeierstrassData& data, const DomainSpec& spec,
                    const Offsets& offsets, std::optional<Complex> basepoint,
                    PhiSign phi_sign, int jobs, double h, double tol) {
  if (!data.M.valid()) throw Error("datum has no expression");
  spec.validate();
  for (const auto& p : data.poles) {
    if (sector_contains_ignoring_exclusions(spec, p.location) &&
        !covered_by_exclusion(spec, p.location))
      throw InvalidDomain("a declared pole lies in the sampled sector without an "
                          "exclusion disk covering it");
  }

  SampleGrid grid = sample_domain(spec);

  CxExpr w = CxExpr::variable(0);
  CxExpr one = CxExpr::constant(Complex(1.0, 0.0));
  CxExpr i_const = CxExpr::constant(Complex(0.0, 1.0));
  CxExpr two = CxExpr::constant(Complex(2.0, 0.0));
  CxExpr w2 = CxExpr::pow(w, 2);
  const CxExpr integrands[3] = {data.M * (one + w2), i_const * data.M * (one - w2),
                                two * data.M * w};
  std::vector<Complex> pole_locs;
  for (const auto& p : data.poles) pole_locs.push_back(p.location);

  Complex bp;
  if (basepoint) {
    bp = *basepoint;
  } else {
    int first = -1;
    for (std::size_t k = 0; k < grid.nodes.size(); ++k)
      if (grid.active[k]) {
        first = static_cast<int>(k);
        break;
      }
    if (first < 0) throw DisconnectedGrid("grid has no active nodes");
    bp = grid.nodes[static_cast<std::size_t>(first)];
  }

  AntiderivativeField fields[3];
  for (int k = 0; k < 3; ++k)
    fields[k] = antiderivative_grid(integrands[k], bp, grid, tol,
                                    std::span<const Complex>(pole_locs));

  // The attribute pass runs without the data's own domain attached: boundary
  // nodes carry finite-difference stencils that spill slightly past the
  // sector, which is harmless away from poles and the unit circle.
  WeierstrassData free_data = data;
  free_data.domain.reset();
  SurfaceEval ev(free_data, bp, offsets, phi_sign, tol);

  MeshData mesh;
  std::vector<int> vid(grid.nodes.size(), -1);
  std::vector<int> vnode;
  for (std::size_t k = 0; k < grid.nodes.size(); ++k) {
    if (!grid.active[k]) continue;
    vid[k] = static_cast<int>(mesh.vertices.size());
    vnode.push_back(static_cast<int>(k));
    mesh.vertices.push_back(SurfaceSample{grid.nodes[k], {}, {}, 0.0, 0.0});
  }

  parallel_for(mesh.vertices.size(), jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t v = begin; v < end; ++v) {
      std::size_t k = static_cast<std::size_t>(vnode[v]);
      Complex zeta = grid.nodes[k];
      SurfaceEval::Anchor a{zeta,
                            {fields[0].values[k], fields[1].values[k], fields[2].values[k]}};
      SurfaceSample& s = mesh.vertices[v];
      s.position = ev.position(a);
      s.normal = gauss_map(zeta);
      if (phi_sign == PhiSign::Minus) s.normal[2] = -s.normal[2];
      double m = std::abs(data.M.eval(zeta));
      double t = m * (1.0 - std::norm(zeta)) / 2.0;
      s.conformal_factor_sq = t * t;
      s.mean_curvature = mean_curvature(ev.forms(a, h));
    }
  });

  for (int i = 0; i + 1 < grid.n_r; ++i) {
    for (int j = 0; j + 1 < grid.n_angle; ++j) {
      int v00 = vid[static_cast<std::size_t>(grid.index(i, j))];
      int v10 = vid[static_cast<std::size_t>(grid.index(i + 1, j))];
      int v01 = vid[static_cast<std::size_t>(grid.index(i, j + 1))];
      int v11 = vid[static_cast<std::size_t>(grid.index(i + 1, j + 1))];
      if (v00 < 0 || v10 < 0 || v01 < 0 || v11 < 0) continue;
      mesh.faces.push_back({v00, v10, v11});
      mesh.faces.push_back({v00, v11, v01});
    }
  }
  return mesh;
}

std::string export_obj(const MeshData& mesh) {
  const int n = static_cast<int>(mesh.vertices.size());
  std::string out;
  out.reserve(mesh.vertices.size() * 64 + mesh.faces.size() * 24);
  for (const auto& v : mesh.vertices) {
    out += "v ";
    append17(out, v.position[0]);
    out += ' ';
    append17(out, v.position[1]);
    out += ' ';
    append17(out, v.position[2]);
    out += '\n';
  }
  for (const auto& f : mesh.faces) {
    for (int c = 0; c < 3; ++c)
      if (f[c] < 0 || f[c] >= n) throw Error("face index out of range");
    out += "f " + std::to_string(f[0] + 1) + ' ' + std::to_string(f[1] + 1) + ' ' +
           std::to_string(f[2] + 1) + '\n';
  }
  return out;
}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.emplace_back(text.substr(start));
      break;
    }
    lines.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<double> parse_fields(const std::string& body, char sep, const char* what) {
  std::vector<double> vals;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t end = body.find(sep, start);
    std::string tok = end == std::string::npos ? body.substr(start)
                                               : body.substr(start, end - start);
    char* tail = nullptr;
    double v = std::strtod(tok.c_str(), &tail);
    if (tail == tok.c_str() || (tail && *tail != '\0'))
      throw Error(std::string("malformed ") + what + " field \"" + tok + "\"");
    vals.push_back(v);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return vals;
}

}  // namespace

ParsedObj parse_obj(std::string_view text) {
  ParsedObj obj;
  for (const std::string& line : split_lines(text)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.size() > 2 && line[0] == 'v' && line[1] == ' ') {
      std::vector<double> v = parse_fields(line.substr(2), ' ', "OBJ vertex");
      if (v.size() != 3) throw Error("OBJ vertex line needs 3 coordinates");
      obj.vertices.push_back(Vec3{v[0], v[1], v[2]});
    } else if (line.size() > 2 && line[0] == 'f' && line[1] == ' ') {
      std::vector<double> v = parse_fields(line.substr(2), ' ', "OBJ face");
      if (v.size() != 3) throw Error("OBJ face line needs 3 indices");
      std::array<int, 3> f{};
      for (int c = 0; c < 3; ++c) {
        int idx = static_cast<int>(v[static_cast<std::size_t>(c)]);
        if (idx < 1) throw Error("OBJ face indices are 1-based");
        f[static_cast<std::size_t>(c)] = idx - 1;
      }
      obj.faces.push_back(f);
    } else {
      throw Error("unsupported OBJ line \"" + line + "\"");
    }
  }
  return obj;
}

static const char* const kCsvHeader = "re_zeta,im_zeta,x,y,phi,lambda_sq,H,N1,N2,N3";

std::string export_csv(std::span<const SurfaceSample> samples) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& s : samples) {
    const double fields[10] = {s.zeta.real(),     s.zeta.imag(),
                               s.position[0],     s.position[1],
                               s.position[2],     s.conformal_factor_sq,
                               s.mean_curvature,  s.normal[0],
                               s.normal[1],       s.normal[2]};
    for (int c = 0; c < 10; ++c) {
      if (c) out += ',';
      append17(out, fields[c]);
    }
    out += '\n';
  }
  return out;
}

std::vector<SurfaceSample> parse_csv(std::string_view text) {
  std::vector<std::string> lines = split_lines(text);
  if (lines.empty() || lines[0] != kCsvHeader)
    throw Error("CSV header mismatch; expected \"" + std::string(kCsvHeader) + "\"");
  std::vector<SurfaceSample> samples;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::vector<double> v = parse_fields(lines[i], ',', "CSV");
    if (v.size() != 10) throw Error("CSV row needs 10 fields");
    SurfaceSample s;
    s.zeta = Complex(v[0], v[1]);
    s.position = Vec3{v[2], v[3], v[4]};
    s.conformal_factor_sq = v[5];
    s.mean_curvature = v[6];
    s.normal = Vec3{v[7], v[8], v[9]};
    samples.push_back(s);
  }
  return samples;
}

}  // namespace maxsurf
