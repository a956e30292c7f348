#include <benchmark/benchmark.h>

#include "chevdv/dv.hpp"
#include "chevdv/random.hpp"
#include "chevdv/stability.hpp"

using namespace chevdv;

namespace {

const char* kSystems[] = {"B3", "C3", "E6", "E7"};

void BM_CommutatorFormula(benchmark::State& state) {
  auto sys = ChevalleySystem::parse(kSystems[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(verify_commutator_formula(sys, Ring::integers(), {-2, -1, 1, 2}));
  state.SetLabel(sys->roots().name());
}
BENCHMARK(BM_CommutatorFormula)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_CollectPositive(benchmark::State& state) {
  auto sys = ChevalleySystem::parse("E6");
  const RootSystem& rs = sys->roots();
  Ring R = Ring::prime_field(5);
  Rng rng(1);
  SteinbergWord w = random_word(rng, sys, R, static_cast<std::size_t>(state.range(0)),
                                [&](RootId a) { return rs.is_positive(a); });
  CollectOrder order = CollectOrder::positive(rs);
  for (auto _ : state) benchmark::DoNotOptimize(collect(w, order));
}
BENCHMARK(BM_CollectPositive)->Arg(10)->Arg(40)->Arg(160);

void BM_Factorize(benchmark::State& state) {
  const std::pair<const char*, const char*> cases[] = {{"B3", "F5"}, {"C3", "F7"}, {"E6", "F2"}, {"E7", "F2"}};
  auto [name, ring] = cases[state.range(0)];
  auto sys = ChevalleySystem::parse(name);
  Ring R = Ring::parse(ring);
  Rng rng(7);
  std::vector<SteinbergWord> words;
  for (int k = 0; k < 16; ++k) words.push_back(random_word(rng, sys, R, static_cast<std::size_t>(state.range(1))));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(factorize_dv(words[k++ % words.size()]));
  state.SetLabel(std::string(name) + "/" + ring);
}
BENCHMARK(BM_Factorize)->ArgsProduct({{0, 1, 2, 3}, {10, 20, 40}})->Unit(benchmark::kMillisecond);

void BM_DvReduce(benchmark::State& state) {
  auto sys = ChevalleySystem::parse(state.range(0) == 0 ? "B3" : "E6");
  const RootSystem& rs = sys->roots();
  Ring R = Ring::prime_field(state.range(0) == 0 ? 5 : 2);
  ParabolicPair pp = parabolic_pair(rs);
  Rng rng(3);
  std::vector<SteinbergWord> words;
  for (int k = 0; k < 16; ++k)
    words.push_back(random_relator(rng, sys, R) *
                    random_word(rng, sys, R, 10, [&](RootId a) { return rs.coeff(a, pp.j) == 0; }));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(stab_kernel_express(words[k++ % words.size()]));
  state.SetLabel(rs.name());
}
BENCHMARK(BM_DvReduce)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SimpleLemma(benchmark::State& state) {
  Ring R = state.range(0) == 0 ? Ring::integers() : Ring::integers_mod(12);
  Rng rng(5);
  std::vector<Vec> cols;
  for (int k = 0; k < 64; ++k) cols.push_back(random_unimodular(rng, R, 5));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(simple_lemma_reduce(cols[k++ % cols.size()]));
  state.SetLabel(R.name());
}
BENCHMARK(BM_SimpleLemma)->Arg(0)->Arg(1);

void BM_AsrReduce(benchmark::State& state) {
  Ring R = state.range(0) == 0 ? Ring::integers() : Ring::integers_mod(12);
  Rng rng(5);
  std::vector<Vec> cols;
  for (int k = 0; k < 64; ++k) cols.push_back(random_isotropic(rng, R, 4));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(asr_reduce(cols[k++ % cols.size()]));
  state.SetLabel(R.name());
}
BENCHMARK(BM_AsrReduce)->Arg(0)->Arg(1);

}  // namespace
BENCHMARK_MAIN();
