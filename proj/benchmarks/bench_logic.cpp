#include <benchmark/benchmark.h>

#include "synth/constituents.hpp"
#include "synth/modal_topology.hpp"

namespace {

void BM_S4SweepThreeWorlds(benchmark::State& state) {
  const std::vector<std::string> worlds{"0", "1", "2"};
  for (auto _ : state) {
    for (std::uint32_t mask = 0; mask < (1u << 9); ++mask) {
      std::vector<std::pair<std::string, std::string>> access;
      int bit = 0;
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b, ++bit) {
          if ((mask >> bit) & 1) access.emplace_back(worlds[a], worlds[b]);
        }
      }
      benchmark::DoNotOptimize(
          synth::s4_correspondence(synth::KripkeFrame(worlds, access)));
    }
  }
}
BENCHMARK(BM_S4SweepThreeWorlds)->Unit(benchmark::kMillisecond);

void BM_KuratowskiSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<std::string> worlds;
  for (int i = 0; i < n; ++i) worlds.push_back(std::to_string(i));
  std::vector<std::pair<std::string, std::string>> access;
  for (int i = 0; i + 1 < n; ++i) {
    access.emplace_back(worlds[i], worlds[i + 1]);
  }
  const synth::KripkeFrame frame(worlds, access);
  for (auto _ : state) {
    benchmark::DoNotOptimize(synth::kuratowski_check(frame));
  }
}
BENCHMARK(BM_KuratowskiSweep)->Arg(8)->Arg(12);

void BM_ConstituentOf(benchmark::State& state) {
  const synth::Vocabulary vocab({{"P", 1}, {"R", 2}});
  const synth::FiniteModel model(
      vocab, {"a", "b", "c"},
      {{"P", {{"a"}, {"c"}}}, {"R", {{"a", "b"}, {"b", "c"}, {"c", "a"}}}});
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(synth::constituent_of(model, {"a"}, depth));
  }
}
BENCHMARK(BM_ConstituentOf)->Arg(1)->Arg(2)->Arg(3);

void BM_EnumerateConstituents(benchmark::State& state) {
  const synth::Vocabulary vocab({{"P", 1}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(synth::enumerate_constituents(vocab, 1, 2));
  }
}
BENCHMARK(BM_EnumerateConstituents);

}  // namespace
