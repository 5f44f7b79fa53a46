#include "monocity/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "monocity/listing.hpp"

namespace monocity {

double SimulationConfig::default_initial_price() const {
    return seller_power * incomes.mean_income();
}

AttractivenessSpec SimulationConfig::attractiveness_spec() const {
    return AttractivenessSpec::for_grid(linear_size, spacing, attractiveness_steepness,
                                        attractiveness_cutoff);
}

void SimulationConfig::validate() const {
    incomes.validate();
    policy.validate();
    if (static_cast<int>(policy.rates.size()) != incomes.num_categories)
        throw std::invalid_argument("SimulationConfig: policy size must equal K");
    if (linear_size < 3 || linear_size % 2 == 0)
        throw std::invalid_argument("SimulationConfig: L must be odd and >= 3");
    if (spacing <= 0.0) throw std::invalid_argument("SimulationConfig: spacing must be positive");
    if (attractiveness_steepness <= 0.0)
        throw std::invalid_argument("SimulationConfig: R must be positive");
    if (dwellings_per_location < 1)
        throw std::invalid_argument("SimulationConfig: N must be >= 1");
    if (utility_attractiveness_weight < 0.0 || utility_attractiveness_weight > 1.0)
        throw std::invalid_argument("SimulationConfig: beta must be in [0,1]");
    if (bid_multiplier <= 0.0) throw std::invalid_argument("SimulationConfig: zeta must be positive");
    if (sale_rate < 0.0 || sale_rate > 1.0)
        throw std::invalid_argument("SimulationConfig: alpha must be in [0,1]");
    if (markup < 0.0) throw std::invalid_argument("SimulationConfig: mu must be nonnegative");
    if (ask_discount <= 0.0 || ask_discount > 1.0)
        throw std::invalid_argument("SimulationConfig: lambda must be in (0,1]");
    if (revision_period < 1) throw std::invalid_argument("SimulationConfig: tau must be >= 1");
    if (seller_power < 0.0 || seller_power > 1.0)
        throw std::invalid_argument("SimulationConfig: nu must be in [0,1]");
    if (foreign_search_radius2 < 0)
        throw std::invalid_argument("SimulationConfig: foreign search radius must be nonnegative");
    if (horizon < 0 || burn_in < 0 || window < 1)
        throw std::invalid_argument("SimulationConfig: bad run protocol");
    if (initial_price && *initial_price < 0.0)
        throw std::invalid_argument("SimulationConfig: initial price must be nonnegative");
}

Simulation::Simulation(SimulationConfig config, std::uint64_t seed)
    : config_(std::move(config)),
      grid_(config_.linear_size, config_.spacing, config_.attractiveness_spec()),
      seed_(seed),
      rng_(seed) {
    config_.validate();

    const int locations = grid_.num_locations();
    state_.t = 0;
    state_.dwellings_per_location = config_.dwellings_per_location;
    state_.prices.assign(locations, config_.initial_price.value_or(config_.default_initial_price()));
    state_.dwellings.resize(static_cast<std::size_t>(locations) * config_.dwellings_per_location);
    for (int loc = 0; loc < locations; ++loc)
        for (int i = 0; i < config_.dwellings_per_location; ++i)
            state_.dwellings[state_.first_dwelling(loc) + i].location = loc;

    if (config_.seed_initial_occupants) {
        std::vector<double> cumulative(config_.incomes.num_categories);
        double acc = 0.0;
        for (int k = 0; k < config_.incomes.num_categories; ++k) {
            acc += config_.incomes.shares[k];
            cumulative[k] = acc;
        }
        for (auto& d : state_.dwellings)
            d.occupant_category =
                static_cast<std::int16_t>(1 + sample_cumulative(cumulative, uniform01(rng_)));
    }

    // Reservation bids per category; foreign buyers are outside the K
    // categories and pay the top policy rate only when explicitly included.
    bid_prices_.resize(config_.incomes.num_categories + 1);
    for (int k = 1; k <= config_.incomes.num_categories; ++k)
        bid_prices_[k - 1] =
            reservation_bid(config_.incomes.income(k), config_.bid_multiplier, config_.policy.rate(k));
    const double foreign_rate =
        config_.foreign_buyers_taxed ? config_.policy.rates.back() : 0.0;
    bid_prices_.back() = reservation_bid(config_.foreign_income(), config_.bid_multiplier, foreign_rate);

    record_.config = config_;
    record_.seed = seed;
}

void Simulation::step() {
    const int locations = grid_.num_locations();
    const int categories = config_.incomes.num_categories;
    state_.t += 1;

    // Stage 1: arrival cohort chooses locations from the current price field.
    std::vector<std::vector<Bid>> bids(locations);
    const std::vector<int> arrivals = arrival_counts(config_.incomes);
    for (int k = 1; k <= categories; ++k) {
        const ChoiceDistribution choice =
            choice_probabilities(config_.incomes.income(k), config_.policy.rate(k),
                                 config_.utility_attractiveness_weight, state_.prices, grid_);
        if (choice.priced_out) continue; // the whole cohort leaves
        const std::vector<int> counts = sample_buyer_locations(arrivals[k - 1], choice, rng_);
        for (int loc = 0; loc < locations; ++loc)
            for (int c = 0; c < counts[loc]; ++c) bids[loc].push_back({k, bid_prices_[k - 1]});
    }

    // Stage 1b: foreign buyers search uniformly inside the central disc.
    if (config_.foreign_influx && config_.foreign_arrivals() > 0) {
        ChoiceDistribution uniform_center;
        uniform_center.probabilities.resize(locations, 0.0);
        int inside = 0;
        for (int loc = 0; loc < locations; ++loc)
            if (grid_.radius2(loc) <= config_.foreign_search_radius2) {
                uniform_center.probabilities[loc] = 1.0;
                ++inside;
            }
        if (inside > 0) {
            for (double& p : uniform_center.probabilities) p /= inside;
            const std::vector<int> counts =
                sample_buyer_locations(config_.foreign_arrivals(), uniform_center, rng_);
            for (int loc = 0; loc < locations; ++loc)
                for (int c = 0; c < counts[loc]; ++c)
                    bids[loc].push_back({config_.foreign_category(), bid_prices_.back()});
        }
    }

    // Stage 2: listings spawn; new listings are sellable this same step.
    spawn_listings(state_, config_.sale_rate, rng_);

    // Stages 3-6 location by location: build the books, clear, settle.
    for (int loc = 0; loc < locations; ++loc) {
        std::vector<Ask> asks;
        const int base = state_.first_dwelling(loc);
        for (int i = 0; i < config_.dwellings_per_location; ++i) {
            const Dwelling& d = state_.dwellings[base + i];
            if (d.status != Occupancy::OnMarket) continue;
            const int age = state_.t - d.listing_time;
            asks.push_back({base + i,
                            reservation_offer(d.listing_base_price, age, config_.markup,
                                              config_.ask_discount, config_.revision_period),
                            age});
        }
        if (bids[loc].empty() && asks.empty()) continue;

        Rng location_rng(derive_seed(seed_, static_cast<std::uint64_t>(state_.t),
                                     static_cast<std::uint64_t>(loc)));
        ClearingResult cleared =
            clear_location(loc, std::move(bids[loc]), std::move(asks), config_.seller_power,
                           config_.clearing_mode, config_.strict_crossing, location_rng);

        for (const Transaction& tx : cleared.transactions) {
            Dwelling& d = state_.dwellings[tx.dwelling];
            d.occupant_category = static_cast<std::int16_t>(tx.buyer_category);
            d.status = Occupancy::Housed;
            d.listing_time = -1;
            d.listing_base_price = 0.0;
            record_.transactions.push_back({state_.t, tx});
        }
        state_.prices[loc] = update_market_price(cleared.transactions, state_.prices[loc]);
    }

    record_step();
}

void Simulation::record_step() {
    record_.prices_by_step.push_back(state_.prices);
    const int slots = config_.incomes.num_categories + 1;
    std::vector<std::uint32_t> occupancy(static_cast<std::size_t>(grid_.num_locations()) * slots, 0);
    for (const Dwelling& d : state_.dwellings) {
        if (d.occupant_category == kInitialOccupant) continue;
        ++occupancy[static_cast<std::size_t>(d.location) * slots + (d.occupant_category - 1)];
    }
    record_.occupancy_by_step.push_back(std::move(occupancy));
}

SimulationRecord Simulation::run() {
    for (int t = 0; t < config_.horizon; ++t) step();
    return record_;
}

SimulationRecord run_simulation(const SimulationConfig& config, std::uint64_t seed) {
    Simulation sim(config, seed);
    return sim.run();
}

Summary summarize(const SimulationRecord& record, int burn_in, int window) {
    if (window < 1) throw std::invalid_argument("summarize: window must be >= 1");
    if (record.num_steps() < burn_in + window)
        throw std::invalid_argument("summarize: record shorter than burn_in + window");

    const SimulationConfig& config = record.config;
    const CityGrid grid(config.linear_size, config.spacing, config.attractiveness_spec());
    const int categories = config.incomes.num_categories;
    const int slots = categories + 1;
    const int rings = grid.num_rings();

    Summary summary;
    summary.burn_in = burn_in;
    summary.window = window;
    summary.rings.resize(rings);

    std::vector<double> price_sums(rings, 0.0);
    std::vector<std::vector<double>> share_sums(rings, std::vector<double>(categories, 0.0));
    std::vector<double> txn_price_sums(rings, 0.0);
    std::vector<long> txn_counts(rings, 0);
    double weighted_price_sum = 0.0;
    double weighted_count = 0.0;

    for (int t = burn_in; t < burn_in + window; ++t) {
        const auto& prices = record.prices_by_step[t];
        const auto& occupancy = record.occupancy_by_step[t];
        for (int loc = 0; loc < grid.num_locations(); ++loc) {
            const int ring = grid.ring_of(loc);
            price_sums[ring] += prices[loc];
            double counted = 0.0;
            for (int c = 0; c < slots; ++c)
                counted += occupancy[static_cast<std::size_t>(loc) * slots + c];
            for (int c = 0; c < categories; ++c)
                share_sums[ring][c] += occupancy[static_cast<std::size_t>(loc) * slots + c];
            weighted_price_sum += prices[loc] * counted;
            weighted_count += counted;
        }
    }
    for (const TransactionRecord& tr : record.transactions) {
        if (tr.step <= burn_in || tr.step > burn_in + window) continue;
        const int ring = grid.ring_of(tr.tx.location);
        txn_price_sums[ring] += tr.tx.price;
        ++txn_counts[ring];
    }

    for (int ring = 0; ring < rings; ++ring) {
        RingSummary& rs = summary.rings[ring];
        rs.radius2 = grid.ring_radius2()[ring];
        rs.radius = grid.ring_radius(ring);
        rs.locations = static_cast<int>(grid.rings()[ring].size());
        rs.mean_price = price_sums[ring] / (static_cast<double>(window) * rs.locations);
        rs.transaction_count = txn_counts[ring];
        rs.mean_transaction_price =
            txn_counts[ring] > 0 ? txn_price_sums[ring] / txn_counts[ring] : 0.0;
        rs.occupancy_shares.resize(categories, 0.0);
        double total = 0.0;
        for (double s : share_sums[ring]) total += s;
        if (total > 0.0)
            for (int c = 0; c < categories; ++c) rs.occupancy_shares[c] = share_sums[ring][c] / total;
    }
    summary.occupancy_weighted_mean_price =
        weighted_count > 0.0 ? weighted_price_sum / weighted_count : 0.0;
    return summary;
}

} // namespace monocity
