#include "monocity/scenarios.hpp"

#include <atomic>
#include <thread>

#include "monocity/metrics.hpp"

namespace monocity {
namespace scenarios {

std::vector<IncomePreset> income_presets() {
    return {
        {"g26", 30.0, 11.86}, {"g28", 28.0, 12.65}, {"g30", 26.0, 13.44}, {"g32", 23.5, 14.43},
        {"g34", 21.0, 15.41}, {"g36", 19.0, 16.21}, {"g38", 16.5, 17.19}, {"g40", 14.0, 18.18},
        {"g42", 12.0, 18.97}, {"g44", 10.0, 19.76}, {"g46", 7.5, 20.75},  {"g48", 5.0, 21.74},
    };
}

std::vector<PolicyPreset> policy_presets() {
    const PolicyVector subsidies{{-0.20, -0.15, -0.10, -0.05, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}};
    const PolicyVector taxes{{0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.05, 0.10, 0.15, 0.20}};
    PolicyVector both = subsidies;
    for (std::size_t i = 0; i < both.rates.size(); ++i) both.rates[i] += taxes.rates[i];
    return {
        {"none", PolicyVector::none(10)},
        {"S", subsidies},
        {"T", taxes},
        {"ST", both},
    };
}

SimulationConfig apply_income_preset(SimulationConfig base, const IncomePreset& preset) {
    base.incomes.base_income = preset.base_income;
    base.incomes.spread = preset.spread;
    return base;
}

namespace {

RunResult execute(const RunSpec& spec) {
    RunResult result;
    result.preset = spec.preset;
    result.policy = spec.policy;
    result.replication = spec.replication;
    result.seed = spec.seed;
    try {
        const SimulationRecord record = run_simulation(spec.config, spec.seed);
        const Summary summary = summarize(record, spec.config.burn_in, spec.config.window);
        result.gini = metrics::gini(spec.config.incomes);
        const auto segregation =
            metrics::window_segregation(record, spec.config.burn_in, spec.config.window);
        result.segregation = segregation ? segregation->mean : 0.0;
        const auto price = metrics::global_mean_price(summary);
        result.global_mean_price = price.value_or(0.0);
        for (const RingSummary& ring : summary.rings) {
            result.ring_radius2.push_back(ring.radius2);
            result.ring_prices.push_back(ring.mean_price);
        }
        result.ok = true;
    } catch (const std::exception& e) {
        result.ok = false;
        result.error = e.what();
    }
    return result;
}

} // namespace

std::vector<RunResult> run_sweep(const std::vector<RunSpec>& specs, int workers) {
    std::vector<RunResult> results(specs.size());
    if (specs.empty()) return results;
    if (workers <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        workers = hw > 0 ? static_cast<int>(hw) : 4;
    }
    workers = std::min<int>(workers, static_cast<int>(specs.size()));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= specs.size()) return;
            results[i] = execute(specs[i]);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return results;
}

std::vector<RunSpec> inequality_experiment(const SimulationConfig& base, int replications,
                                           std::uint64_t base_seed) {
    std::vector<RunSpec> specs;
    const auto presets = income_presets();
    for (std::size_t i = 0; i < presets.size(); ++i) {
        for (int rep = 0; rep < replications; ++rep) {
            RunSpec spec;
            spec.preset = presets[i].name;
            spec.policy = "none";
            spec.replication = rep;
            spec.seed = derive_seed(base_seed, i, static_cast<std::uint64_t>(rep));
            spec.config = apply_income_preset(base, presets[i]);
            specs.push_back(std::move(spec));
        }
    }
    return specs;
}

std::vector<RunSpec> policy_experiment(const SimulationConfig& base, int replications,
                                       std::uint64_t base_seed) {
    std::vector<RunSpec> specs;
    const auto incomes = income_presets();
    const auto policies = policy_presets();
    for (std::size_t i = 0; i < incomes.size(); ++i) {
        for (const PolicyPreset& policy : policies) {
            for (int rep = 0; rep < replications; ++rep) {
                RunSpec spec;
                spec.preset = incomes[i].name;
                spec.policy = policy.name;
                spec.replication = rep;
                // Same seed across policy variants: common random numbers.
                spec.seed = derive_seed(base_seed, i, static_cast<std::uint64_t>(rep));
                spec.config = apply_income_preset(base, incomes[i]);
                spec.config.policy = policy.policy;
                specs.push_back(std::move(spec));
            }
        }
    }
    return specs;
}

std::vector<RunSpec> foreign_influx_experiment(const SimulationConfig& base, int replications,
                                               std::uint64_t base_seed) {
    std::vector<RunSpec> specs;
    const IncomePreset equal = income_presets().front();
    for (int rep = 0; rep < replications; ++rep) {
        for (const bool influx : {false, true}) {
            RunSpec spec;
            spec.preset = equal.name;
            spec.policy = influx ? "influx" : "baseline";
            spec.replication = rep;
            spec.seed = derive_seed(base_seed, 0, static_cast<std::uint64_t>(rep));
            spec.config = apply_income_preset(base, equal);
            spec.config.foreign_influx = influx;
            specs.push_back(std::move(spec));
        }
    }
    return specs;
}

} // namespace scenarios
} // namespace monocity
