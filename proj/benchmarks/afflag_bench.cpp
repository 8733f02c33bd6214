#include <benchmark/benchmark.h>

#include "afflag/nilhecke.hpp"
#include "afflag/strong_order.hpp"
#include "afflag/symfunc.hpp"

using namespace afflag;

namespace {

AffinePerm rho_chain(int n, int len) { return AffinePerm::rho(n, len); }

void BM_group_product(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const AffinePerm u = rho_chain(n, 6);
  const AffinePerm v = dynkin_omega(u);
  for (auto _ : state) benchmark::DoNotOptimize(u * v);
}
BENCHMARK(BM_group_product)->Arg(3)->Arg(6)->Arg(12);

void BM_canonical_reduced_word(benchmark::State& state) {
  const AffinePerm w = rho_chain(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(w.canonical_reduced_word());
}
BENCHMARK(BM_canonical_reduced_word)->Arg(4)->Arg(8)->Arg(12);

void BM_lower_covers(benchmark::State& state) {
  const AffinePerm w = rho_chain(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lower_covers(w));
}
BENCHMARK(BM_lower_covers)->Arg(4)->Arg(6)->Arg(8);

void BM_coproduct(benchmark::State& state) {
  const AffinePerm w = rho_chain(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coproduct(w));
}
BENCHMARK(BM_coproduct)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_struct_const_subset(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  const AffinePerm w = rho_chain(3, len);
  const AffinePerm u = rho_chain(3, len / 2);
  for (auto _ : state) benchmark::DoNotOptimize(struct_const(w, u, u));
}
BENCHMARK(BM_struct_const_subset)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_strong_strips(benchmark::State& state) {
  const AffinePerm w = rho_chain(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(strong_strips(w, 2));
}
BENCHMARK(BM_strong_strips)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_pieri_cap(benchmark::State& state) {
  const AffinePerm w = rho_chain(3, static_cast<int>(state.range(0)));
  CoproductCache cache;
  cache.get(w);  // warm: measures extraction, not the coproduct
  const NilCoxElem x = NilCoxElem::basis(w);
  for (auto _ : state) benchmark::DoNotOptimize(pieri_cap(1, x, &cache));
}
BENCHMARK(BM_pieri_cap)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_kschur(benchmark::State& state) {
  const std::vector<int> lambda(static_cast<size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(kschur(3, lambda));
}
BENCHMARK(BM_kschur)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_spoly_product(benchmark::State& state) {
  SPoly p(4);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) p.add_term({a, b, c}, a + b + c + 1);
  for (auto _ : state) benchmark::DoNotOptimize(p * p);
}
BENCHMARK(BM_spoly_product)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
