#include <benchmark/benchmark.h>

#include "monocity/analytic.hpp"
#include "monocity/auction.hpp"
#include "monocity/engine.hpp"

using namespace monocity;

namespace {

void bench_simulation_step(benchmark::State& state) {
    SimulationConfig config;
    config.horizon = 0;
    Simulation sim(config, 42);
    for (int i = 0; i < 50; ++i) sim.step(); // warm past the transient
    for (auto _ : state) sim.step();
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(bench_simulation_step)->Unit(benchmark::kMillisecond);

void bench_batch_clearing(benchmark::State& state) {
    const int orders = static_cast<int>(state.range(0));
    std::vector<Bid> bids;
    std::vector<Ask> asks;
    std::uint64_t mix = 7;
    for (int i = 0; i < orders; ++i) {
        bids.push_back({1 + i % 10, 10.0 + static_cast<double>(mix64(mix += i) % 100)});
        asks.push_back({i, 5.0 + static_cast<double>(mix64(mix += i) % 100), i % 7});
    }
    Rng rng(1);
    for (auto _ : state) {
        auto result = clear_location(0, bids, asks, 0.1, ClearingMode::Batch, false, rng);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(bench_batch_clearing)->Arg(100)->Arg(1000);

void bench_price_curve(benchmark::State& state) {
    analytic::Params params;
    params.arrivals = 100.0;
    params.attract = {3.0, default_city_radius(11, 1.0), false};
    analytic::SolveOptions options;
    options.grid_points = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto curve = solve_price_curve(params, 0.5, options);
        benchmark::DoNotOptimize(curve);
    }
}
BENCHMARK(bench_price_curve)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
