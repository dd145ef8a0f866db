#include <benchmark/benchmark.h>

#include "rplane/gaussian.hpp"
#include "rplane/hecke_words.hpp"
#include "rplane/qforms.hpp"
#include "rplane/scans.hpp"

using namespace rplane;

static void BM_GaussMoment(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  Poly2 p;
  for (int i = 0; i <= degree; ++i) p += Poly2::monomial(i, degree - i, cplx(1.0 + i, 0.5));
  const cplx z(0.3, 1.2);
  const CVec2 w{0.4, cplx(-0.2, 0.1)};
  for (auto _ : state) benchmark::DoNotOptimize(gauss_moment(p, z, w));
}
BENCHMARK(BM_GaussMoment)->Arg(2)->Arg(8)->Arg(16);

static void BM_PoincareEval(benchmark::State& state) {
  const PoincareSeries s(11, 1, state.range(0));
  const cplx z(0.1, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(s.eval(z, 1));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.size()));
}
BENCHMARK(BM_PoincareEval)->Arg(50)->Arg(200);

static void BM_AlphaTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(alpha_table(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_AlphaTable)->Arg(24)->Arg(64);

static void BM_Delta(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(delta(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Delta)->Arg(128)->Arg(512);

static void BM_PairingIac(benchmark::State& state) {
  const TestFunction h = growth_default_test(11);
  for (auto _ : state) benchmark::DoNotOptimize(pairing_iac(7, 5, 1, 1.0, static_cast<int>(state.range(0)), h));
}
BENCHMARK(BM_PairingIac)->Arg(0)->Arg(3);

BENCHMARK_MAIN();
