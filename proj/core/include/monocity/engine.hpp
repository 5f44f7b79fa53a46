// Simulation engine: configuration, the six-stage time step, full-run
// records and ring-averaged summaries.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monocity/auction.hpp"
#include "monocity/choice.hpp"
#include "monocity/geometry.hpp"
#include "monocity/population.hpp"

namespace monocity {

struct SimulationConfig {
    // City
    int linear_size = 11;
    double spacing = 1.0;
    double attractiveness_steepness = 3.0;
    bool attractiveness_cutoff = false;
    int dwellings_per_location = 100;

    // Buyers
    IncomeDistribution incomes{10, 15.0, 5.0,
                               {0.25, 0.20, 0.15, 0.10, 0.08, 0.07, 0.06, 0.04, 0.03, 0.02},
                               1000};
    double utility_attractiveness_weight = 0.5; // beta
    double bid_multiplier = 1.0;                // zeta
    PolicyVector policy = PolicyVector::none(10);

    // Sellers
    double sale_rate = 0.1;      // alpha
    double markup = 0.1;         // mu
    double ask_discount = 0.95;  // lambda
    int revision_period = 2;     // tau

    // Matching
    double seller_power = 0.1;   // nu
    ClearingMode clearing_mode = ClearingMode::Batch;
    bool strict_crossing = false;

    // Foreign-buyer influx: arrivals/10 buyers with income Y_K + spread,
    // choosing uniformly among locations with x^2+y^2 <= search radius^2.
    bool foreign_influx = false;
    int foreign_search_radius2 = 9;
    bool foreign_buyers_taxed = false;

    // Run protocol
    int horizon = 150;
    int burn_in = 50;
    int window = 100;
    std::optional<double> initial_price; // default: seller_power * mean arrival income
    bool seed_initial_occupants = false; // draw t=0 occupant categories from the arrival shares

    int foreign_category() const { return incomes.num_categories + 1; }
    double foreign_income() const { return incomes.income(incomes.num_categories) + incomes.spread; }
    int foreign_arrivals() const { return incomes.arrivals_per_step / 10; }
    double default_initial_price() const;
    AttractivenessSpec attractiveness_spec() const;

    void validate() const; // throws std::invalid_argument
};

struct TransactionRecord {
    int step;
    Transaction tx;
};

// Everything needed to reproduce the summaries of a run. Occupancy counts are
// per step, location-major, with K+1 slots per location (categories 1..K plus
// foreign buyers); dwellings still held by the t=0 occupants are not counted.
struct SimulationRecord {
    SimulationConfig config;
    std::uint64_t seed = 0;
    std::vector<std::vector<double>> prices_by_step;
    std::vector<std::vector<std::uint32_t>> occupancy_by_step;
    std::vector<TransactionRecord> transactions;

    int num_steps() const { return static_cast<int>(prices_by_step.size()); }
    int occupancy_categories() const { return config.incomes.num_categories + 1; }
};

class Simulation {
  public:
    Simulation(SimulationConfig config, std::uint64_t seed);

    void step();               // advance one time step, appending to the record
    SimulationRecord run();    // run to the configured horizon and return the record

    const MarketState& state() const { return state_; }
    const CityGrid& grid() const { return grid_; }
    const SimulationConfig& config() const { return config_; }
    const SimulationRecord& record() const { return record_; }

  private:
    void record_step();

    SimulationConfig config_;
    CityGrid grid_;
    MarketState state_;
    SimulationRecord record_;
    std::uint64_t seed_;
    Rng rng_;
    std::vector<double> bid_prices_; // per category, 1..K then foreign
};

SimulationRecord run_simulation(const SimulationConfig& config, std::uint64_t seed);

struct RingSummary {
    int radius2 = 0;
    double radius = 0.0;
    int locations = 0;
    double mean_price = 0.0;       // price field averaged over window and ring
    long transaction_count = 0;
    double mean_transaction_price = 0.0;
    std::vector<double> occupancy_shares; // categories 1..K, over counted occupants
};

struct Summary {
    int burn_in = 0;
    int window = 0;
    std::vector<RingSummary> rings;
    double occupancy_weighted_mean_price = 0.0;
};

// Ring means over steps [burn_in, burn_in+window); throws if the record is
// shorter than burn_in + window.
Summary summarize(const SimulationRecord& record, int burn_in = 50, int window = 100);

} // namespace monocity
