#include <benchmark/benchmark.h>

#include "hahn/explog.hpp"
#include "hahn/sampling.hpp"
#include "hahn/towers.hpp"

using namespace hahn;

namespace {

const TruncationContext kCtx;

std::vector<Series> sample_series(int n, int max_terms, int depth, unsigned seed) {
    Sampler s(seed);
    std::vector<Series> out;
    while (static_cast<int>(out.size()) < n) {
        Series x = s.rational_series(max_terms, depth);
        if (!x.is_zero()) out.push_back(std::move(x));
    }
    return out;
}

void BM_series_mul(benchmark::State& state) {
    auto xs = sample_series(64, static_cast<int>(state.range(0)), 3, 11);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul(xs[i % 64], xs[(i + 1) % 64], kCtx));
        ++i;
    }
}
BENCHMARK(BM_series_mul)->Arg(3)->Arg(6)->Arg(12);

void BM_series_invert(benchmark::State& state) {
    auto xs = sample_series(64, 4, 2, 13);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(invert(xs[i % 64], kCtx));
        ++i;
    }
}
BENCHMARK(BM_series_invert);

void BM_exp_log_round_trip(benchmark::State& state) {
    HFunction boot = make_h(HKind::Boot);
    boot_constant(boot, kCtx);  // cache outside the loop
    auto xs = sample_series(64, 3, 2, 17);
    for (auto& x : xs)
        if (sign(x) < 0) x = negate(x);
    size_t i = 0;
    for (auto _ : state) {
        const Series& x = xs[i % 64];
        benchmark::DoNotOptimize(exp(log(x, boot, kCtx), boot, kCtx));
        ++i;
    }
}
BENCHMARK(BM_exp_log_round_trip);

void BM_constant_compare(benchmark::State& state) {
    Constant e = Constant::exp(Constant(1));
    Constant near(e.enclosure(30).lo);
    for (auto _ : state)
        benchmark::DoNotOptimize(Constant::compare(e, near, 64));
}
BENCHMARK(BM_constant_compare);

void BM_no_omega_verdict(benchmark::State& state) {
    BaseChain base = make_base("omega1xZ");
    for (auto _ : state)
        benchmark::DoNotOptimize(no_omega_verdict(base, 2, 20, 5));
}
BENCHMARK(BM_no_omega_verdict);

}  // namespace

BENCHMARK_MAIN();
