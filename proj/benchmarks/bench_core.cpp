#include <benchmark/benchmark.h>

#include "hardy/enclosure.hpp"
#include "hardy/sampling.hpp"

namespace {

using namespace hardy;

PolyMatrix sample(std::size_t d, bool degenerate, std::uint64_t seed = 17) {
  Rng rng(seed);
  return degenerate ? sample_degenerate(rng, d, 3, SamplerKind::conditioned)
                    : sample_full_rank(rng, d, 3, SamplerKind::conditioned);
}

void BM_PolyRoots(benchmark::State& state) {
  Rng rng(5);
  const Poly p = random_poly(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(poly_roots(p));
}
BENCHMARK(BM_PolyRoots)->Arg(4)->Arg(12)->Arg(32);

void BM_Det(benchmark::State& state) {
  const PolyMatrix a = sample(static_cast<std::size_t>(state.range(0)), false);
  for (auto _ : state) benchmark::DoNotOptimize(det(a));
}
BENCHMARK(BM_Det)->DenseRange(2, 4);

void BM_BuildSpec(benchmark::State& state) {
  const PolyMatrix a = sample(static_cast<std::size_t>(state.range(0)), state.range(1) != 0);
  for (auto _ : state) benchmark::DoNotOptimize(build_spec(a));
}
BENCHMARK(BM_BuildSpec)->Args({3, 0})->Args({4, 0})->Args({3, 1})->Args({4, 1});

void BM_TruncateMembership(benchmark::State& state) {
  const SubspaceSpec s = build_spec(sample(3, state.range(1) != 0));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(truncate_membership(s, n));
}
BENCHMARK(BM_TruncateMembership)->Args({16, 0})->Args({32, 0})->Args({16, 1})->Args({32, 1})->Unit(benchmark::kMillisecond);

void BM_GeneratedBasis(benchmark::State& state) {
  const PolyMatrix a = sample(3, false);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generated_basis(a, n));
}
BENCHMARK(BM_GeneratedBasis)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_Enclosure(benchmark::State& state) {
  Rng rng(trial_seed(99, 0));
  const PolyMatrix a = sample_enclosure_instance(rng, static_cast<EnclosureFamily>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enclosure(a));
}
BENCHMARK(BM_Enclosure)->DenseRange(0, kEnclosureFamilies - 1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
