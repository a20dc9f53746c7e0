#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "doctest.h"
#include "maxsurf/catalog.hpp"
#include "maxsurf/domain.hpp"
#include "maxsurf/errors.hpp"
#include "maxsurf/surf_io.hpp"
#include "maxsurf/types.hpp"
#include "maxsurf/weierstrass.hpp"

using namespace maxsurf;

namespace {

double vdist(const Vec3& a, const Vec3& b) {
  double d = 0.0;
  for (int i = 0; i < 3; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

DomainSpec catalog_sector_grid(int n_r, int n_angle) {
  DomainSpec d = *catenoid().weierstrass.domain;
  d.n_r = n_r;
  d.n_angle = n_angle;
  return d;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("mesh over the catalog sector: size, anchoring, attributes") {
  const CatalogEntry& cat = catenoid();
  DomainSpec spec = catalog_sector_grid(16, 32);
  MeshData mesh = build_mesh(cat.weierstrass, spec, cat.offsets, cat.basepoint);

  CHECK(mesh.vertices.size() == 512);  // 16 x 32 nodes, all active
  CHECK(mesh.faces.size() == 930);     // 15 x 31 cells, two triangles each

  // Boundary nodes sit within an ulp of the sector edge, so the reference
  // conformal factor is evaluated on a domain-free copy of the datum.
  WeierstrassData free_data = cat.weierstrass;
  free_data.domain.reset();

  double worst_pos = 0.0, worst_normal = 0.0, worst_lambda = 0.0;
  double worst_h_far = 0.0, worst_h_all = 0.0;
  for (const SurfaceSample& v : mesh.vertices) {
    worst_pos = std::max(worst_pos, vdist(v.position, cat.closed_position(v.zeta)));
    worst_normal = std::max(worst_normal, vdist(v.normal, gauss_map(v.zeta)));
    double lam = conformal_factor(free_data, v.zeta);
    worst_lambda = std::max(worst_lambda,
                            std::abs(v.conformal_factor_sq - lam) / (1.0 + lam));
    worst_h_all = std::max(worst_h_all, std::abs(v.mean_curvature));
    // Second-difference rounding noise grows like (r^2-1)^{-3} toward the
    // unit circle; the 1e-4 bound is honest only away from it.
    if (std::abs(v.zeta) >= 1.25)
      worst_h_far = std::max(worst_h_far, std::abs(v.mean_curvature));
  }
  CHECK(worst_pos <= 1e-10);
  CHECK(worst_normal <= 1e-12);
  CHECK(worst_lambda <= 1e-14);
  CHECK(worst_h_far <= 1e-4);
  // Innermost ring (r = 1.05): the amplified rounding noise reaches the
  // 1e-2 scale at the pinned step; this is a breakage guard, not a bound.
  CHECK(worst_h_all <= 5e-2);

  for (const std::array<int, 3>& f : mesh.faces)
    for (int idx : f) {
      CHECK(idx >= 0);
      CHECK(idx < static_cast<int>(mesh.vertices.size()));
    }
}

TEST_CASE("default basepoint anchors the first vertex at the offsets") {
  const CatalogEntry& cat = catenoid();
  DomainSpec spec = catalog_sector_grid(6, 9);
  Offsets off{0.125, -2.5, 3.75};
  MeshData mesh = build_mesh(cat.weierstrass, spec, off);
  REQUIRE(!mesh.vertices.empty());
  CHECK(mesh.vertices[0].position[0] == off.x0);
  CHECK(mesh.vertices[0].position[1] == off.y0);
  CHECK(mesh.vertices[0].position[2] == off.phi0);
}

TEST_CASE("a pole inside the sector must be covered by an exclusion") {
  WeierstrassData d;
  d.M = parse_expr("1/(zeta-1.5)");
  d.poles = {PoleDecl{Complex(1.5, 0.0), 1}};
  d.name = "sector-pole";

  DomainSpec spec;
  spec.r_min = 1.05;
  spec.r_max = 3.0;
  spec.angle_min = -0.5;
  spec.angle_max = 0.5;
  spec.n_r = 4;
  spec.n_angle = 6;

  CHECK_THROWS_AS(build_mesh(d, spec, Offsets{}), InvalidDomain);

  spec.exclusions.push_back(ExclusionDisk{Complex(1.5, 0.0), 0.12});
  MeshData mesh = build_mesh(d, spec, Offsets{});
  CHECK(!mesh.vertices.empty());
  CHECK(!mesh.faces.empty());
}

TEST_CASE("an exclusion that severs the grid is rejected") {
  WeierstrassData d;
  d.M = parse_expr("-1/(2*zeta^2)");
  d.poles = {PoleDecl{Complex(0.0, 0.0), 2}};
  d.name = "catenoid-free";

  DomainSpec spec;
  spec.r_min = 1.1;
  spec.r_max = 1.3;
  spec.angle_min = -0.5;
  spec.angle_max = 0.5;
  spec.n_r = 3;
  spec.n_angle = 11;
  // Kills the three middle angle columns outright: no path of grid neighbors
  // joins the two remaining flanks.
  spec.exclusions.push_back(ExclusionDisk{Complex(1.2, 0.0), 0.2});

  CHECK_THROWS_AS(build_mesh(d, spec, Offsets{}), DisconnectedGrid);
}

TEST_CASE("mesh output does not depend on the worker count") {
  const CatalogEntry& hel = helicoid();
  DomainSpec spec = catalog_sector_grid(8, 12);
  MeshData a = build_mesh(hel.weierstrass, spec, hel.offsets, hel.basepoint,
                          PhiSign::Plus, /*jobs=*/1);
  MeshData b = build_mesh(hel.weierstrass, spec, hel.offsets, hel.basepoint,
                          PhiSign::Plus, /*jobs=*/3);
  CHECK(export_obj(a) == export_obj(b));
  CHECK(export_csv(a.vertices) == export_csv(b.vertices));
}

TEST_CASE("OBJ export/parse round-trip is bitwise") {
  const CatalogEntry& cat = catenoid();
  DomainSpec spec = catalog_sector_grid(5, 7);
  MeshData mesh = build_mesh(cat.weierstrass, spec, cat.offsets, cat.basepoint);

  std::string obj = export_obj(mesh);
  ParsedObj back = parse_obj(obj);
  REQUIRE(back.vertices.size() == mesh.vertices.size());
  REQUIRE(back.faces.size() == mesh.faces.size());
  for (std::size_t i = 0; i < back.vertices.size(); ++i)
    for (int c = 0; c < 3; ++c) CHECK(back.vertices[i][c] == mesh.vertices[i].position[c]);
  for (std::size_t i = 0; i < back.faces.size(); ++i) CHECK(back.faces[i] == mesh.faces[i]);

  // Re-exporting the identical geometry reproduces the identical bytes.
  MeshData again = build_mesh(cat.weierstrass, spec, cat.offsets, cat.basepoint);
  CHECK(export_obj(again) == obj);
}

TEST_CASE("CSV export/parse round-trip preserves every field") {
  const CatalogEntry& hel = helicoid();
  DomainSpec spec = catalog_sector_grid(4, 5);
  MeshData mesh = build_mesh(hel.weierstrass, spec, hel.offsets, hel.basepoint);

  std::string csv = export_csv(mesh.vertices);
  CHECK(csv.substr(0, csv.find('\n')) == "re_zeta,im_zeta,x,y,phi,lambda_sq,H,N1,N2,N3");

  std::vector<SurfaceSample> back = parse_csv(csv);
  REQUIRE(back.size() == mesh.vertices.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    const SurfaceSample& a = mesh.vertices[i];
    const SurfaceSample& b = back[i];
    CHECK(b.zeta == a.zeta);
    for (int c = 0; c < 3; ++c) {
      CHECK(b.position[c] == a.position[c]);
      CHECK(b.normal[c] == a.normal[c]);
    }
    CHECK(b.conformal_factor_sq == a.conformal_factor_sq);
    CHECK(b.mean_curvature == a.mean_curvature);
  }
}

TEST_CASE("malformed inputs are rejected") {
  CHECK_THROWS_AS(parse_obj("v 0 0 0\nvt 1 2\n"), Error);
  CHECK_THROWS_AS(parse_obj("v 1 2\n"), Error);
  CHECK_THROWS_AS(parse_obj("f 1 2\n"), Error);

  MeshData bad;
  bad.vertices.resize(2);
  bad.faces.push_back({0, 1, 5});
  CHECK_THROWS_AS(export_obj(bad), Error);

  CHECK_THROWS_AS(parse_csv("nope,nope\n1,2\n"), Error);
  CHECK_THROWS_AS(
      parse_csv("re_zeta,im_zeta,x,y,phi,lambda_sq,H,N1,N2,N3\n1,2,3\n"), Error);
}

}  // TEST_SUITE("io")
