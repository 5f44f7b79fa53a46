// Income categories, arrival cohorts and per-dwelling occupancy state.
#pragma once

#include <cstdint>
#include <vector>

#include "monocity/rng.hpp"

namespace monocity {

// Category incomes are Y_k = Y1 + (k-1)*spread, k = 1..K. `shares` are the
// fractions of the per-step arrival cohort in each category and must sum to 1.
struct IncomeDistribution {
    int num_categories = 1;
    double base_income = 15.0;
    double spread = 5.0;
    std::vector<double> shares{1.0};
    int arrivals_per_step = 1000;

    double income(int category) const { return base_income + (category - 1) * spread; }
    double mean_income() const;
    void validate() const; // throws std::invalid_argument
};

// Deterministic per-category arrival counts: largest-remainder rounding of
// arrivals_per_step * shares, so the cohort size is exact every step.
std::vector<int> arrival_counts(const IncomeDistribution& dist);

// Occupant categories: 1..K regular, K+1 foreign buyers, kInitialOccupant for
// the dwellings seeded at t=0 (unknown income, excluded from metrics).
inline constexpr std::int16_t kInitialOccupant = -1;

enum class Occupancy : std::uint8_t { Housed, OnMarket };

struct Dwelling {
    int location = 0;
    std::int16_t occupant_category = kInitialOccupant;
    Occupancy status = Occupancy::Housed;
    int listing_time = -1;            // valid iff OnMarket
    double listing_base_price = 0.0;  // market price at listing time
};

// Mutable per-run market state: single writer per simulation run.
struct MarketState {
    int t = 0;
    std::vector<double> prices;     // per location
    std::vector<Dwelling> dwellings; // location-major blocks of N
    int dwellings_per_location = 0;

    int num_locations() const { return static_cast<int>(prices.size()); }
    int first_dwelling(int location) const { return location * dwellings_per_location; }
};

// Each housed dwelling flips to OnMarket with probability sale_rate; already
// listed dwellings keep their original listing time and base price.
void spawn_listings(MarketState& state, double sale_rate, Rng& rng);

} // namespace monocity
