#include <benchmark/benchmark.h>

#include "trapgame/equal_rewards.hpp"
#include "trapgame/game.hpp"
#include "trapgame/k1.hpp"
#include "trapgame/lp_oracle.hpp"
#include "trapgame/one_uniform.hpp"
#include "trapgame/partition.hpp"

#include <random>
#include <vector>

using namespace trapgame;

namespace {

// Fixed seed so numbers are comparable across runs.
std::vector<Rat> random_rewards(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> reward(1, 100);
  std::vector<Rat> out(n);
  for (auto& r : out) r = reward(rng);
  return out;
}

void BM_SingletonClosedForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GameInstance g(random_rewards(n, 7), 2, Hypergraph::one_uniform());
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_one_uniform(g));
  }
}
BENCHMARK(BM_SingletonClosedForm)->Arg(8)->Arg(64)->Arg(256);

void BM_EqualRewardsValue(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(equal_rewards_value(n, n / 3, Rat(7)));
  }
}
BENCHMARK(BM_EqualRewardsValue)->Arg(12)->Arg(60)->Arg(240);

void BM_SingleTrapSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GameInstance g(random_rewards(n, 11), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_single_trap(g));
  }
}
BENCHMARK(BM_SingleTrapSolve)->Arg(8)->Arg(16)->Arg(32);

void BM_BestPartition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto rewards = random_rewards(n, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(best_partition(rewards));
  }
}
BENCHMARK(BM_BestPartition)->Arg(16)->Arg(24)->Arg(32);

// The exact oracle cost is dominated by the simplex over all viable open
// sets: n = 7, k = 2 already means 119 columns of exact rationals.
void BM_ExactOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GameInstance g(random_rewards(n, 17), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_oracle(g));
  }
}
BENCHMARK(BM_ExactOracle)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_RotationMixture(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = n / 16;
  std::vector<Rat> marginals(n, Rat(k, n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rotation_mixture(marginals, k));
  }
}
BENCHMARK(BM_RotationMixture)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
