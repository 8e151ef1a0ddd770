#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "foldcalc/algebra.hpp"
#include "foldcalc/basediagram.hpp"
#include "foldcalc/kirby.hpp"

namespace {

foldcalc::algebra::IntMatrix random_matrix(int rows, int cols, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  auto m = foldcalc::algebra::IntMatrix::zero(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
  }
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto m = random_matrix(n, n, 0xf01dca1c);
  for (auto _ : state) {
    auto result = foldcalc::algebra::smith_normal_form(m);
    benchmark::DoNotOptimize(result.diagonal);
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

// Full invariant computation for a double cover of the twisted Klein-bottle
// bundle family: cover construction, fundamental group, homology, Betti
// numbers.
void BM_DoubleCoverInvariants(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto base = foldcalc::kirby::catalog("K", {n});
  for (auto _ : state) {
    const auto cover = foldcalc::kirby::double_cover(base);
    auto inv = foldcalc::kirby::invariants(cover);
    benchmark::DoNotOptimize(inv.h1);
  }
}
BENCHMARK(BM_DoubleCoverInvariants)->Arg(1)->Arg(8)->Arg(64);

// Simplification of the high-genus ladder seeds: the dominant base-diagram
// workload (move search plus replay bookkeeping).
void BM_SimplifyLadder(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  foldcalc::basediagram::BaseDiagram seed;
  seed.regions.push_back(
      {foldcalc::basediagram::FiberClass::nonorientable(2), 2});
  for (int i = 1; i <= g; ++i) {
    seed.circles.push_back({foldcalc::basediagram::CircleKind::Indefinite,
                            foldcalc::basediagram::Arrow::Inward, 0, 0});
    seed.regions.push_back(
        {foldcalc::basediagram::FiberClass::nonorientable(2 * i + 2), 0});
  }
  for (auto _ : state) {
    auto r = foldcalc::basediagram::simplify_to_sblf(seed);
    benchmark::DoNotOptimize(r.result);
  }
}
BENCHMARK(BM_SimplifyLadder)->Arg(2)->Arg(6)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
