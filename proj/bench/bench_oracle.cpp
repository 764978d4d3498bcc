// Copyright 2026 The mcs-toolkit Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference kernels against their OpenMP counterparts, with the
// suffix-tree algorithm alongside for scale. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "mcs/extremal.hpp"
#include "mcs/mcs_fast.hpp"
#include "mcs/oracle.hpp"

namespace {

mcs::Text input(const benchmark::State& state) {
    return mcs::random_text(static_cast<mcs::Pos>(state.range(0)), "ab", 42);
}

void BM_OracleSerial(benchmark::State& state) {
    const mcs::Text t = input(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mcs::mcs_oracle(t));
    }
    state.SetComplexityN(state.range(0));
}

void BM_OracleOmp(benchmark::State& state) {
    const mcs::Text t = input(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mcs::mcs_oracle_omp(t));
    }
    state.SetComplexityN(state.range(0));
}

void BM_SuffixRunsSerial(benchmark::State& state) {
    const mcs::Text t = input(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mcs::suffix_run_total(t));
    }
    state.SetComplexityN(state.range(0));
}

void BM_SuffixRunsOmp(benchmark::State& state) {
    const mcs::Text t = input(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mcs::suffix_run_total_omp(t));
    }
    state.SetComplexityN(state.range(0));
}

void BM_Fast(benchmark::State& state) {
    const mcs::Text t = input(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mcs::mcs_fast(t));
    }
    state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_OracleSerial)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_OracleOmp)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)->Unit(benchmark::kMillisecond)->UseRealTime()->Complexity();
BENCHMARK(BM_SuffixRunsSerial)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_SuffixRunsOmp)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)->Unit(benchmark::kMillisecond)->UseRealTime()->Complexity();
BENCHMARK(BM_Fast)->RangeMultiplier(4)->Range(1 << 8, 1 << 18)->Unit(benchmark::kMillisecond)->Complexity();

BENCHMARK_MAIN();
