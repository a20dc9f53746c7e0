#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maxsurf/domain.hpp"
#include "maxsurf/report.hpp"
#include "maxsurf/types.hpp"
#include "maxsurf/weierstrass.hpp"

namespace maxsurf {

/// One evaluated surface point: parameter, position, normal, conformal factor
/// (half-normalized convention, see conformal_factor) and FD mean curvature.
struct SurfaceSample {
  Complex zeta;
  Vec3 position{};
  Vec3 normal{};
  double conformal_factor_sq = 0.0;
  double mean_curvature = 0.0;
};

struct MeshData {
  std::vector<SurfaceSample> vertices;
  std::vector<std::array<int, 3>> faces;  // 0-based vertex indices
};

/// Triangulate the sampled domain: vertices at active grid nodes (positions
/// through the antiderivative field from the basepoint; default basepoint is
/// the first active node, whose field value is exactly zero), two triangles
/// per fully active grid cell. `jobs` bounds worker threads for the per-vertex
/// attribute pass (0 = hardware concurrency); the output does not depend on it.
/// Throws InvalidDomain, DisconnectedGrid.
MeshData build_mesh(const WeierstrassData& data, const DomainSpec& spec,
                    const Offsets& offsets, std::optional<Complex> basepoint = {},
                    PhiSign phi_sign = PhiSign::Plus, int jobs = 0, double h = 1e-4,
                    double tol = 1e-12);

/// Wavefront OBJ: `v x y phi` lines (17 significant digits) then 1-based
/// `f i j k` lines.
std::string export_obj(const MeshData& mesh);

struct ParsedObj {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;  // 0-based
};

/// Minimal OBJ reader for the subset export_obj emits (round-trip checks).
ParsedObj parse_obj(std::string_view text);

/// CSV with header re_zeta,im_zeta,x,y,phi,lambda_sq,H,N1,N2,N3 and
/// 17-significant-digit values.
std::string export_csv(std::span<const SurfaceSample> samples);

/// Inverse of export_csv.
std::vector<SurfaceSample> parse_csv(std::string_view text);

}  // namespace maxsurf
