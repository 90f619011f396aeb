// Direct summation vs. FFT paths for the 2D and 4D transforms.

#include <benchmark/benchmark.h>

#include <random>

#include "hyperfourier/qft2d.hpp"
#include "hyperfourier/spacetime.hpp"

namespace hf = hyperfourier;

namespace {

hf::QuaternionField2D random_field(std::size_t n) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  hf::QuaternionField2D f(n, n);
  for (hf::Quaternion& q : f.data()) q = {u(gen), u(gen), u(gen), u(gen)};
  return f;
}

hf::SpacetimeField4D random_spacetime(std::size_t n) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  hf::SpacetimeField4D f({n, n, n, n});
  for (hf::Multivector& mv : f.data()) {
    mv = hf::Multivector(hf::sta::signature());
    for (int b = 0; b < 16; ++b) mv[b] = u(gen);
  }
  return f;
}

template <hf::QSpectrum2D (*Transform)(const hf::QuaternionField2D&)>
void bm_2d(benchmark::State& state) {
  const hf::QuaternionField2D f = random_field(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Transform(f));
}

template <hf::STSpectrum4D (*Transform)(const hf::SpacetimeField4D&)>
void bm_4d(benchmark::State& state) {
  const hf::SpacetimeField4D f = random_spacetime(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Transform(f));
}

}  // namespace

BENCHMARK(bm_2d<hf::qft_forward_direct>)->Name("qft/direct")->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_2d<hf::qft_forward_fast>)->Name("qft/fast")->RangeMultiplier(2)->Range(8, 256)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_2d<hf::qftr_forward_direct>)->Name("qftr/direct")->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_2d<hf::qftr_forward_fast>)->Name("qftr/fast")->RangeMultiplier(2)->Range(8, 256)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_4d<hf::sft_forward_direct>)->Name("sft/direct")->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_4d<hf::sft_forward_fast>)->Name("sft/fast")->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
