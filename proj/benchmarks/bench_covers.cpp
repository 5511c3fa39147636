#include <benchmark/benchmark.h>

#include "synth/foundation.hpp"
#include "synth/modal_topology.hpp"
#include "synth/systems.hpp"

namespace {

void BM_DecimalCover(benchmark::State& state) {
  const synth::FormalSystem decimal = synth::decimal_system();
  const synth::FoundationHandle handle{decimal.relation, *decimal.root};
  const std::size_t depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(synth::canonical_cover(handle, depth));
  }
}
BENCHMARK(BM_DecimalCover)->Arg(1)->Arg(2)->Arg(3);

void BM_DyadicRefinementCheck(benchmark::State& state) {
  const synth::FormalSystem dyadic = synth::dyadic_system();
  const synth::FoundationHandle handle{dyadic.relation, *dyadic.root};
  const auto fine = synth::canonical_cover(handle, 6);
  const auto coarse = synth::canonical_cover(handle, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(synth::refines(fine, coarse));
  }
}
BENCHMARK(BM_DyadicRefinementCheck);

void BM_FgCheckDecimal(benchmark::State& state) {
  const synth::FormalSystem decimal = synth::decimal_system();
  const synth::CoverStructure structure = synth::cover_structure_from_system(
      decimal, *decimal.root, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(synth::fg_axiom_check(structure));
  }
}
BENCHMARK(BM_FgCheckDecimal)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
