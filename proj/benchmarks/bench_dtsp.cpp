#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dtsp/gtsp.hpp"
#include "dtsp/instance.hpp"
#include "dtsp/interval.hpp"
#include "dtsp/pipeline.hpp"

namespace {

using namespace dtsp;

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<Configuration> random_poses(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Configuration> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(1000 * unit(rng), 1000 * unit(rng), kTwoPi * unit(rng));
  return out;
}

void BM_DubinsShortest(benchmark::State& state) {
  const auto poses = random_poses(1024, 1);
  const TurnRadius rho(100.0);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dubins_shortest(poses[i % 1024], poses[(i + 1) % 1024], rho));
    ++i;
  }
}
BENCHMARK(BM_DubinsShortest);

void BM_SolveInterval(benchmark::State& state) {
  const auto poses = random_poses(1024, 2);
  const TurnRadius rho(100.0);
  const double width = kTwoPi / static_cast<double>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    const Configuration& a = poses[i % 1024];
    const Configuration& b = poses[(i + 1) % 1024];
    const double lo1 = std::min(a.theta(), kTwoPi - width), lo2 = std::min(b.theta(), kTwoPi - width);
    benchmark::DoNotOptimize(
        solve_interval_value(a.position(), {lo1, lo1 + width}, b.position(), {lo2, lo2 + width}, rho));
    ++i;
  }
}
BENCHMARK(BM_SolveInterval)->Arg(1)->Arg(4)->Arg(32);

void BM_HeldKarp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ProblemInstance inst = generate_instance(n, 1000.0, 100.0, 3);
  const auto cost = euclidean_matrix(inst.targets);
  for (auto _ : state) benchmark::DoNotOptimize(held_karp(cost, n));
}
BENCHMARK(BM_HeldKarp)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_BuildLowerMatrix(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const ProblemInstance inst = generate_instance(8, 1000.0, 100.0, 4);
  const std::vector<Partition> parts(inst.targets.size(), uniform_partition(m));
  for (auto _ : state) benchmark::DoNotOptimize(build_lower_matrix(inst.targets, parts, TurnRadius(inst.rho)));
}
BENCHMARK(BM_BuildLowerMatrix)->Arg(4)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
