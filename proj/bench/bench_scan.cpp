#include <benchmark/benchmark.h>

#include "lgf/compositae.hpp"
#include "lgf/sequences.hpp"
#include "lgf/superposition.hpp"
#include "lgf/witness.hpp"

namespace {

void BM_ScanFermat2Serial(benchmark::State& state) {
    const auto hi = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lgf::scan_pseudoprimes_serial(lgf::WitnessTest::fermat2(), 2, hi));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(hi - 1));
}

void BM_ScanFermat2Parallel(benchmark::State& state) {
    const auto hi = static_cast<std::uint64_t>(state.range(0));
    const auto threads = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lgf::scan_pseudoprimes(lgf::WitnessTest::fermat2(), 2, hi, threads));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(hi - 1));
}

void BM_ScanLucasSerial(benchmark::State& state) {
    const auto hi = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lgf::scan_pseudoprimes_serial(lgf::WitnessTest::lucas(), 2, hi));
    }
}

void BM_ScanLucasParallel(benchmark::State& state) {
    const auto hi = static_cast<std::uint64_t>(state.range(0));
    const auto threads = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lgf::scan_pseudoprimes(lgf::WitnessTest::lucas(), 2, hi, threads));
    }
}

void BM_ScanCentralBinomial(benchmark::State& state) {
    const auto hi = static_cast<std::uint64_t>(state.range(0));
    const auto threads = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lgf::scan_pseudoprimes(lgf::WitnessTest::central_binomial(), 2, hi, threads));
    }
}

void BM_CompositaeDP(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const lgf::IntSeries f = lgf::primes1_series(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lgf::compositae_dp(f, n));
    }
}

// ng via the compositae triangle against the F' * H integer product
void BM_LogSuperpositionCompositae(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const lgf::IntSeries f = lgf::catalan_shifted_series(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lgf::log_superposition(f, n));
    }
}

void BM_LogDerivativeIntegers(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const lgf::IntSeries f = lgf::catalan_shifted_series(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lgf::log_derivative_integers(f, n));
    }
}

}  // namespace

BENCHMARK(BM_ScanFermat2Serial)->Arg(100'000)->Arg(1'000'000);
BENCHMARK(BM_ScanFermat2Parallel)->Args({100'000, 1})->Args({100'000, 4})->Args({1'000'000, 4});
BENCHMARK(BM_ScanLucasSerial)->Arg(100'000);
BENCHMARK(BM_ScanLucasParallel)->Args({100'000, 1})->Args({100'000, 4});
BENCHMARK(BM_ScanCentralBinomial)->Args({2'000, 1})->Args({2'000, 4});
BENCHMARK(BM_CompositaeDP)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_LogSuperpositionCompositae)->Arg(64)->Arg(128);
BENCHMARK(BM_LogDerivativeIntegers)->Arg(64)->Arg(128);

BENCHMARK_MAIN();
