#include <benchmark/benchmark.h>

#include "synth/reals.hpp"

namespace {

void BM_LocateSqrt2(benchmark::State& state) {
  const synth::ComputableReal x = synth::sqrt2_minus_one();
  const std::size_t precision = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(synth::locate(x, precision));
  }
}
BENCHMARK(BM_LocateSqrt2)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_LocateRational(benchmark::State& state) {
  const synth::ComputableReal x = synth::from_rational(synth::Rational(355, 1130));
  const std::size_t precision = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(synth::locate(x, precision));
  }
}
BENCHMARK(BM_LocateRational)->Arg(16)->Arg(64);

void BM_CompareAtPrecision(benchmark::State& state) {
  const synth::ComputableReal x = synth::sqrt2_minus_one();
  const synth::ComputableReal y = synth::from_rational(synth::Rational(41, 100));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        synth::compare(x, y, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_CompareAtPrecision)->Arg(10)->Arg(40);

}  // namespace
