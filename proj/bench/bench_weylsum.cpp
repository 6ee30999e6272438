// Serial reference vs OpenMP kernels for the Weyl-group sums.

#include "bh/besselcalc.hpp"

#include <benchmark/benchmark.h>

using namespace bh;

namespace {

const WeylGroup& group(int n) {
  static const WeylGroup g2 = enumerate_weyl(build_root_datum(Family::C, 2));
  static const WeylGroup g3 = enumerate_weyl(build_root_datum(Family::C, 3));
  static const WeylGroup g4 = enumerate_weyl(build_root_datum(Family::C, 4));
  return n == 2 ? g2 : n == 3 ? g3 : g4;
}

RationalFunc shifted_monomial(const RootDatum& d) {
  Vec v(d.n, 0);
  v[0] = 2;
  for (int k = 0; k < d.n; ++k) v[k] += 2 * d.rho_eps[k];
  return RationalFunc::monomial(v);
}

void hecke(benchmark::State& st, Exec ex) {
  const WeylGroup& G = group(int(st.range(0)));
  RationalFunc f = shifted_monomial(G.datum);
  for (auto _ : st) benchmark::DoNotOptimize(hecke_sum(HeckeChar::eps(), G, f, true, ex));
}

void alt(benchmark::State& st, Exec ex) {
  const WeylGroup& G = group(int(st.range(0)));
  // a fat argument so each term costs something
  RationalFunc f(1);
  for (auto& a : G.datum.positive) {
    Vec v = a.xi;
    f = f * (RationalFunc(1) - RationalFunc::monomial(v, 1));
  }
  f = f * RationalFunc::monomial(G.datum.rho);
  for (auto _ : st) benchmark::DoNotOptimize(alternator(G, f, ex));
}

void BM_hecke_serial(benchmark::State& st) { hecke(st, Exec::serial); }
void BM_hecke_parallel(benchmark::State& st) { hecke(st, Exec::parallel); }
void BM_alternator_serial(benchmark::State& st) { alt(st, Exec::serial); }
void BM_alternator_parallel(benchmark::State& st) { alt(st, Exec::parallel); }

}  // namespace

BENCHMARK(BM_hecke_serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hecke_parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_alternator_serial)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_alternator_parallel)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
