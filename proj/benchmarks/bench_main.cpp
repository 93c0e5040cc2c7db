#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "mtfa/closure.hpp"
#include "mtfa/format.hpp"
#include "mtfa/group.hpp"
#include "mtfa/oracle.hpp"

using namespace mtfa;
using testing::GenParams;
using testing::Rng;

namespace {

GenParams params(int tapes, std::size_t states) {
  GenParams p;
  p.tapes = tapes;
  p.states = states;
  return p;
}

void BM_Determinize(benchmark::State& state) {
  Rng rng(1);
  const auto m = testing::random_sync(rng, params(2, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(determinize(m));
}
BENCHMARK(BM_Determinize)->Arg(4)->Arg(8)->Arg(12);

void BM_Complement(benchmark::State& state) {
  Rng rng(2);
  const auto m = testing::random_sync(rng, params(static_cast<int>(state.range(0)), 5));
  for (auto _ : state) benchmark::DoNotOptimize(complement(m));
}
BENCHMARK(BM_Complement)->Arg(1)->Arg(2)->Arg(3);

void BM_SemisortedToSorted(benchmark::State& state) {
  Rng rng(3);
  auto p = params(static_cast<int>(state.range(0)), 16);
  p.density = 0.8;
  const auto m = testing::random_semisorted(rng, p);
  for (auto _ : state) benchmark::DoNotOptimize(semisorted_to_sorted(m));
}
BENCHMARK(BM_SemisortedToSorted)->Arg(2)->Arg(3)->Arg(4);

void BM_FaaCycle(benchmark::State& state) {
  Rng rng(4);
  const auto m = testing::random_faa(rng, params(static_cast<int>(state.range(0)), 4));
  for (auto _ : state) benchmark::DoNotOptimize(saa_to_dfaa(dfaa_to_saa(faa_to_dfaa(m))));
}
BENCHMARK(BM_FaaCycle)->Arg(2)->Arg(3);

void BM_ExistsTwoTape(benchmark::State& state) {
  const auto m = std::get<SortedAsync>(load_machine(std::string(MTFA_FIXTURE_DIR) + "/xn_x2n_sorted.mta"));
  const auto semi = sorted_to_semisorted(m);
  for (auto _ : state) benchmark::DoNotOptimize(exists_two_tape(semi, 0));
}
BENCHMARK(BM_ExistsTwoTape);

void BM_Bridge(benchmark::State& state) {
  Rng rng(5);
  auto p = params(2, static_cast<std::size_t>(state.range(0)));
  p.eps = 0.3;
  const auto m = testing::random_saa(rng, p);
  for (auto _ : state) benchmark::DoNotOptimize(bridge(m));
}
BENCHMARK(BM_Bridge)->Arg(4)->Arg(8)->Arg(16);

// Simulator against oracle over the same domain.
template <Engine E>
void BM_LanguageSet(benchmark::State& state) {
  Rng rng(6);
  auto p = params(static_cast<int>(state.range(0)), 4);
  p.eps = 0.2;
  const AnyMachine m = testing::random_saa(rng, p);
  const BoundedDomain d(alphabet_of(m), tapes_of(m), 3);
  for (auto _ : state) benchmark::DoNotOptimize(language_set(m, d, E));
}
BENCHMARK(BM_LanguageSet<Engine::Simulator>)->Arg(2)->Arg(3);
BENCHMARK(BM_LanguageSet<Engine::Oracle>)->Arg(2)->Arg(3);

void BM_CheckStructure(benchmark::State& state) {
  const auto c = load_bundle(std::string(MTFA_FIXTURE_DIR) + "/groups/zline/bundle.txt");
  for (auto _ : state) {
    StructureChecker checker(c, Budget{static_cast<std::size_t>(state.range(0)), 20000, 0});
    benchmark::DoNotOptimize(checker.run_all());
  }
}
BENCHMARK(BM_CheckStructure)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
