#include <benchmark/benchmark.h>

#include "maxsurf/maxsurf.hpp"

namespace {

using namespace maxsurf;

void BM_ExprEval(benchmark::State& state) {
  CxExpr M = catenoid().weierstrass.M;
  Complex z(1.7, 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(M.eval(z));
  }
}
BENCHMARK(BM_ExprEval);

void BM_ExprDerivative(benchmark::State& state) {
  CxExpr F = catenoid().F;
  for (auto _ : state) {
    benchmark::DoNotOptimize(F.derivative(0));
  }
}
BENCHMARK(BM_ExprDerivative);

void BM_ParseExpr(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_expr("-1/(2*zeta^2) + exp(zeta)*log(zeta)"));
  }
}
BENCHMARK(BM_ParseExpr);

void BM_IntegrateSegment(benchmark::State& state) {
  CxExpr M = catenoid().weierstrass.M;
  PathSpec seg = PathSpec::segment(Complex(1.1, 0.0), Complex(2.5, 0.8));
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(M, seg, 1e-12));
  }
}
BENCHMARK(BM_IntegrateSegment);

void BM_ImmersionAt(benchmark::State& state) {
  const CatalogEntry& e = catenoid();
  SurfaceEval ev(e.weierstrass, e.basepoint, e.offsets);
  Complex z(1.7, 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ev.position(z));
  }
}
BENCHMARK(BM_ImmersionAt);

void BM_AnchoredShift(benchmark::State& state) {
  const CatalogEntry& e = catenoid();
  SurfaceEval ev(e.weierstrass, e.basepoint, e.offsets);
  SurfaceEval::Anchor a = ev.at(Complex(1.7, 0.4));
  Complex z2(1.7001, 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ev.shift(a, z2));
  }
}
BENCHMARK(BM_AnchoredShift);

void BM_FundamentalForms(benchmark::State& state) {
  const CatalogEntry& e = catenoid();
  SurfaceEval ev(e.weierstrass, e.basepoint, e.offsets);
  SurfaceEval::Anchor a = ev.at(Complex(1.7, 0.4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ev.forms(a, 1e-4));
  }
}
BENCHMARK(BM_FundamentalForms);

void BM_UvRoundTrip(benchmark::State& state) {
  Complex z(0.3, 0.2);
  Complex zb = std::conj(z);
  for (auto _ : state) {
    CharacteristicPair uv = uv_from_zeta(z, zb);
    benchmark::DoNotOptimize(zeta_from_uv(uv.u, uv.v));
  }
}
BENCHMARK(BM_UvRoundTrip);

void BM_BuildMesh(benchmark::State& state) {
  const CatalogEntry& e = catenoid();
  DomainSpec spec = *e.weierstrass.domain;
  spec.n_r = static_cast<int>(state.range(0));
  spec.n_angle = 2 * spec.n_r;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        build_mesh(e.weierstrass, spec, e.offsets, e.basepoint));
  }
}
BENCHMARK(BM_BuildMesh)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ExportObj(benchmark::State& state) {
  const CatalogEntry& e = catenoid();
  DomainSpec spec = *e.weierstrass.domain;
  MeshData mesh = build_mesh(e.weierstrass, spec, e.offsets, e.basepoint);
  for (auto _ : state) {
    benchmark::DoNotOptimize(export_obj(mesh));
  }
}
BENCHMARK(BM_ExportObj)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
