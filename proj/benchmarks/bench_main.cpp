#include <benchmark/benchmark.h>

#include "nhm/foliation.hpp"
#include "nhm/quotient.hpp"

using namespace nhm;

namespace {

IntervalSet comb(long teeth) {
  std::vector<Interval> parts;
  for (long i = 0; i < teeth; ++i)
    parts.push_back(Interval::open(ExtRat(2 * i), ExtRat(2 * i + 1)));
  return IntervalSet::of(std::move(parts));
}

ObstacleSet columns(long k) {
  ObstacleSet q;
  for (long i = 0; i < k; ++i)
    q.vsegments.push_back({Rational(i), ExtRat(Rational(i % 3)), ExtRat::pos_inf()});
  return q;
}

void BM_interval_set_intersect(benchmark::State& state) {
  IntervalSet a = comb(state.range(0));
  IntervalSet b = a.subtract(IntervalSet(Interval::open(ExtRat(2), ExtRat(5))));
  for (auto _ : state) benchmark::DoNotOptimize(a.intersect(b));
}
BENCHMARK(BM_interval_set_intersect)->Arg(8)->Arg(64)->Arg(256);

void BM_interval_set_complement(benchmark::State& state) {
  IntervalSet a = comb(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(IntervalSet::complement_within(Interval::whole(), a));
}
BENCHMARK(BM_interval_set_complement)->Arg(8)->Arg(64)->Arg(256);

void BM_saturate_foliation(benchmark::State& state) {
  Presentation p = compile(columns(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(saturate(p, 64));
}
BENCHMARK(BM_saturate_foliation)->Arg(2)->Arg(4)->Arg(8);

void BM_build_quotient(benchmark::State& state) {
  Presentation p = compile(columns(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_quotient(p, 64));
}
BENCHMARK(BM_build_quotient)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
