// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "ncfree/calculus.hpp"
#include "ncfree/haar.hpp"
#include "ncfree/matricial.hpp"

using namespace ncfree;

namespace {

const HaarConfig kHaar{2, 32, 256, 11};

void BM_TraceMomentSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(trace_moment_serial({1, 2}, {1, 2}, kHaar));
}

void BM_TraceMomentParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(trace_moment({1, 2}, {1, 2}, kHaar));
}

struct EvalCase {
  NCPoly p;
  MatrixPoint pt;
};

EvalCase eval_case(int level) {
  Rng rng = stream_for(12, 0);
  return {random_poly(rng, AlgebraSpec::matrix(2), 2, {0, 8, 64}), random_point(rng, level, 2, 2)};
}

void BM_EvalSerial(benchmark::State& state) {
  const EvalCase c = eval_case(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eval_serial(c.p, c.pt, EvalMode::BValued));
}

void BM_EvalParallel(benchmark::State& state) {
  const EvalCase c = eval_case(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eval(c.p, c.pt, EvalMode::BValued));
}

} // namespace

BENCHMARK(BM_TraceMomentSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TraceMomentParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvalSerial)->Arg(4)->Arg(16)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_EvalParallel)->Arg(4)->Arg(16)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
