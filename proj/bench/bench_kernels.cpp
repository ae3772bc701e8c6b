// Serial reference against the OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "frkt/arith.hpp"
#include "frkt/asymptotics.hpp"
#include "frkt/coeffs.hpp"
#include "frkt/kernels.hpp"

using namespace frkt;

namespace {

Exec mode(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

void friable_sieve(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::friable_records(10000000, 1000.0, 1 << 18, mode(st)));
}

void friable_sieve_reference(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::friable_records_reference(10000000, 1000.0));
}

void lambda_sum(benchmark::State& st) {
  const auto all = asym::omega_table(2000000);
  asym::Settings s;
  s.exec = mode(st);
  for (auto _ : st) benchmark::DoNotOptimize(asym::lambda_f(2e6, 500.0, cplx(1.3, 0.4), all, s));
}

void block_sum(benchmark::State& st) {
  const auto exec = mode(st);
  for (auto _ : st)
    benchmark::DoNotOptimize(
        kernels::block_sum(1, 20000000, [](std::uint64_t n) { return cplx(1.0 / double(n), 1.0 / (double(n) * n)); }, exec));
}

void cauchy_nodes(benchmark::State& st) {
  coeffs::CoeffOptions o;
  o.exec = mode(st);
  o.M = 128;
  for (auto _ : st) benchmark::DoNotOptimize(coeffs::cauchy_node_values(cplx(1.3, 0.4), o));
}

}  // namespace

BENCHMARK(friable_sieve)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(friable_sieve_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(lambda_sum)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(block_sum)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(cauchy_nodes)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
