#include "psg/bounds.hpp"
#include "psg/problems.hpp"
#include "psg/projections.hpp"
#include "psg/random.hpp"
#include "psg/schedules.hpp"
#include "psg/solver.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

void BM_RunL1Distance(benchmark::State& state) {
  const auto n = state.range(0);
  const auto problem = psg::make_l1_distance(n, psg::Vector::Zero(n), -1.0, 1.0);
  const auto schedule = psg::StepSchedule::sqrt_decay(problem.R(), problem.L());
  psg::RunOptions options;
  psg::Rng rng(2);
  options.start = psg::sample_member(problem.feasible_set(), rng);
  for (auto _ : state) {
    auto trace = psg::run(problem, schedule, {-1.0, 0.0, 1.0}, 10000, options);
    benchmark::DoNotOptimize(trace.final_gap_min);
  }
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_RunL1Distance)->Arg(10)->Arg(100)->Arg(1000);

void BM_RunCheckedPiecewise(benchmark::State& state) {
  const auto set = psg::FeasibleSet::uniform_box(5, -1.0, 1.0);
  psg::Rng rng(8);
  const auto problem = psg::make_piecewise_linear_max(5, 12, 7, psg::sample_interior(set, rng), 0.0, set);
  const auto schedule = psg::StepSchedule::sqrt_decay(problem.R(), problem.L());
  psg::RunOptions options;
  options.check_invariants = true;
  for (auto _ : state) {
    auto trace = psg::run(problem, schedule, {0.0}, 10000, options);
    benchmark::DoNotOptimize(trace.final_gap_min);
  }
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_RunCheckedPiecewise);

template <int Kind>
void BM_Project(benchmark::State& state) {
  const auto n = state.range(0);
  const auto set = Kind == 0   ? psg::FeasibleSet::uniform_box(n, -1.0, 1.0)
                   : Kind == 1 ? psg::FeasibleSet::ball(psg::Vector::Zero(n), 1.0)
                               : psg::FeasibleSet::simplex(n, 1.0);
  psg::Rng rng(3);
  std::vector<psg::Vector> points;
  for (int i = 0; i < 64; ++i) points.push_back(3.0 * rng.normal_vector(n));
  std::size_t i = 0;
  for (auto _ : state) {
    auto p = psg::project(set, points[i++ & 63]);
    benchmark::DoNotOptimize(p.data());
  }
}
BENCHMARK(BM_Project<0>)->Name("BM_ProjectBox")->Arg(10)->Arg(1000);
BENCHMARK(BM_Project<1>)->Name("BM_ProjectBall")->Arg(10)->Arg(1000);
BENCHMARK(BM_Project<2>)->Name("BM_ProjectSimplex")->Arg(10)->Arg(1000);

void BM_BoundPrefixes(benchmark::State& state) {
  const auto t = state.range(0);
  std::vector<double> etas(static_cast<std::size_t>(t));
  for (std::int64_t s = 1; s <= t; ++s) etas[static_cast<std::size_t>(s - 1)] = psg::eta_sqrt_decay(1.0, 1.0, s);
  for (auto _ : state) {
    auto prefixes = psg::weighted_average_bound_prefixes(1.0, 1.0, etas, -1.0);
    benchmark::DoNotOptimize(prefixes.data());
  }
  state.SetItemsProcessed(state.iterations() * t);
}
BENCHMARK(BM_BoundPrefixes)->Arg(10000)->Arg(1000000);

}  // namespace

BENCHMARK_MAIN();
