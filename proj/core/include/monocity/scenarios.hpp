// Preset experiments: the twelve income distributions, the tax/subsidy
// policies, the foreign-influx run, and parallel sweep orchestration.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monocity/engine.hpp"

namespace monocity {
namespace scenarios {

struct IncomePreset {
    std::string name;
    double base_income; // Y1
    double spread;      // Delta
};

// Twelve distributions with equal total income (mean 60) and Gini indices
// from 0.26 to 0.48, applied on top of the standard arrival shares.
std::vector<IncomePreset> income_presets();

struct PolicyPreset {
    std::string name;
    PolicyVector policy;
};

// none, S (subsidies for the bottom four categories), T (taxes on the top
// four), ST (both combined).
std::vector<PolicyPreset> policy_presets();

SimulationConfig apply_income_preset(SimulationConfig base, const IncomePreset& preset);

struct RunSpec {
    std::string preset;
    std::string policy;
    int replication = 0;
    std::uint64_t seed = 0;
    SimulationConfig config;
};

struct RunResult {
    std::string preset;
    std::string policy;
    int replication = 0;
    std::uint64_t seed = 0;
    bool ok = false;
    std::string error;
    double gini = 0.0;
    double segregation = 0.0;       // H^R, time-averaged over the window
    double global_mean_price = 0.0; // transaction-weighted
    std::vector<int> ring_radius2;
    std::vector<double> ring_prices;
};

// Executes every run spec on a bounded worker pool. Results keep the order of
// the specs; failures are reported per row and do not stop the sweep.
std::vector<RunResult> run_sweep(const std::vector<RunSpec>& specs, int workers = 0);

// Experiment builders. Replication r of income preset i uses the seed derived
// from (base_seed, i, r) for every policy variant, so policy comparisons use
// common random numbers.
std::vector<RunSpec> inequality_experiment(const SimulationConfig& base, int replications,
                                           std::uint64_t base_seed);
std::vector<RunSpec> policy_experiment(const SimulationConfig& base, int replications,
                                       std::uint64_t base_seed);
// Paired runs (influx off/on) of the most equal income distribution.
std::vector<RunSpec> foreign_influx_experiment(const SimulationConfig& base, int replications,
                                               std::uint64_t base_seed);

} // namespace scenarios
} // namespace monocity
