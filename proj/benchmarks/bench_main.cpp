#include <benchmark/benchmark.h>

#include "bettilab/decompose.hpp"
#include "bettilab/jacobian.hpp"
#include "bettilab/monomial.hpp"

using namespace bettilab;

namespace {

MonomialIdeal cycle_ideal(int n) {
  std::vector<std::vector<int>> gens;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    e[static_cast<std::size_t>((i + 1) % n)] = 1;
    gens.push_back(e);
  }
  return make_monomial_ideal(n, std::move(gens));
}

void bm_resolve_cycle(benchmark::State& state) {
  MonomialIdeal I = cycle_ideal(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(I));
}
BENCHMARK(bm_resolve_cycle)->Arg(7)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

void bm_decompose_cycle7(benchmark::State& state) {
  BettiDiagram D = betti_table(cycle_ideal(7));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(D, 4));
}
BENCHMARK(bm_decompose_cycle7)->Unit(benchmark::kMicrosecond);

void bm_random_table(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    MonomialIdeal I = random_squarefree(7, 7, seed++);
    benchmark::DoNotOptimize(betti_table(I));
  }
}
BENCHMARK(bm_random_table)->Unit(benchmark::kMillisecond);

void bm_jacobian_verify(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    JacobianResolution R = build_jacobian(d);
    benchmark::DoNotOptimize(verify_complex(R));
    benchmark::DoNotOptimize(verify_fitting_minors(R));
    benchmark::DoNotOptimize(verify_socle(R));
  }
}
BENCHMARK(bm_jacobian_verify)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
