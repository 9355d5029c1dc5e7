#include <benchmark/benchmark.h>

#include <cmath>

#include "wilson/daha/relations.hpp"
#include "wilson/function/phi.hpp"
#include "wilson/polys/wilson_basis.hpp"
#include "wilson/transform/transforms.hpp"

namespace {

using wilson::HPComplex;
using wilson::ParamSet;
using wilson::Poly;

void BM_BasisSolve(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    // fresh instance so the cache does not hide the back-substitution
    wilson::WilsonBasis basis(ParamSet::canonical());
    benchmark::DoNotOptimize(basis.p(m));
  }
}
BENCHMARK(BM_BasisSolve)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_VerifyRelations(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(wilson::verify_relations(ParamSet::canonical(), degree).overall());
}
BENCHMARK(BM_VerifyRelations)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_PhiLambda(benchmark::State& state) {
  wilson::PhiOptions opts;
  opts.bits = wilson::numeric::working_bits(static_cast<int>(state.range(0)));
  const HPComplex x(0.0, 0.3, opts.bits), lambda(0.0, 0.7, opts.bits);
  for (auto _ : state)
    benchmark::DoNotOptimize(wilson::phi_lambda(ParamSet::canonical(), x, lambda, opts));
}
BENCHMARK(BM_PhiLambda)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_UnitNormQuadrature(benchmark::State& state) {
  wilson::BilinearOptions q;
  q.method = wilson::BilinearMethod::quadrature;
  q.tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(wilson::bilinear_form(ParamSet::canonical(), Poly(1), Poly(1), q));
}
BENCHMARK(BM_UnitNormQuadrature)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
