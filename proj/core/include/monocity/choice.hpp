// Demand side: indirect utility, probabilistic location choice and
// reservation bid prices, including ad-valorem tax/subsidy effects.
#pragma once

#include <span>
#include <vector>

#include "monocity/geometry.hpp"
#include "monocity/rng.hpp"

namespace monocity {

// Per-category tax (positive) or subsidy (negative) rate applied to the
// transaction price; 1 + rate must stay positive.
struct PolicyVector {
    std::vector<double> rates;

    static PolicyVector none(int num_categories) { return {std::vector<double>(num_categories, 0.0)}; }
    double rate(int category) const { return rates[category - 1]; }
    void validate() const; // throws std::invalid_argument
};

// Cobb-Douglas indirect utility (Y - (1+xi)P)^(1-beta) * A^beta, zero when the
// buyer cannot afford the location. With beta = 1 this reduces to A.
double indirect_utility(double income, double policy_rate, double price, double attractiveness,
                        double beta);

struct ChoiceDistribution {
    std::vector<double> probabilities;
    bool priced_out = false; // all utilities were zero; the distribution is empty
};

ChoiceDistribution choice_probabilities(double income, double policy_rate, double beta,
                                        std::span<const double> prices, const CityGrid& grid);

// Multinomial draw of `count` buyers over the locations; a priced-out
// distribution yields zero counts everywhere (the buyers leave).
std::vector<int> sample_buyer_locations(int count, const ChoiceDistribution& choice, Rng& rng);

// Maximum amount a buyer bids: zeta * Y / (1 + xi).
double reservation_bid(double income, double bid_multiplier, double policy_rate);

} // namespace monocity
