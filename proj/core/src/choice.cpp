#include "monocity/choice.hpp"

#include <cmath>
#include <stdexcept>

namespace monocity {

void PolicyVector::validate() const {
    for (double r : rates)
        if (1.0 + r <= 0.0)
            throw std::invalid_argument("PolicyVector: 1 + rate must be positive");
}

double indirect_utility(double income, double policy_rate, double price, double attractiveness,
                        double beta) {
    const double effective_price = (1.0 + policy_rate) * price;
    if (income <= effective_price) return 0.0;
    return std::pow(income - effective_price, 1.0 - beta) * std::pow(attractiveness, beta);
}

ChoiceDistribution choice_probabilities(double income, double policy_rate, double beta,
                                        std::span<const double> prices, const CityGrid& grid) {
    const int n = grid.num_locations();
    if (static_cast<int>(prices.size()) != n)
        throw std::invalid_argument("choice_probabilities: price field size mismatch");
    ChoiceDistribution result;
    result.probabilities.resize(n);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = indirect_utility(income, policy_rate, prices[i], grid.attractiveness_at(i), beta);
        result.probabilities[i] = u;
        total += u;
    }
    if (total <= 0.0) {
        result.probabilities.clear();
        result.priced_out = true;
        return result;
    }
    for (double& p : result.probabilities) p /= total;
    return result;
}

std::vector<int> sample_buyer_locations(int count, const ChoiceDistribution& choice, Rng& rng) {
    if (count < 0) throw std::invalid_argument("sample_buyer_locations: negative count");
    if (choice.priced_out) return {};
    std::vector<int> counts(choice.probabilities.size(), 0);
    if (count == 0) return counts;
    std::vector<double> cumulative(choice.probabilities.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < choice.probabilities.size(); ++i) {
        acc += choice.probabilities[i];
        cumulative[i] = acc;
    }
    for (int i = 0; i < count; ++i)
        ++counts[sample_cumulative(cumulative, uniform01(rng))];
    return counts;
}

double reservation_bid(double income, double bid_multiplier, double policy_rate) {
    if (bid_multiplier <= 0.0)
        throw std::invalid_argument("reservation_bid: multiplier must be positive");
    return bid_multiplier * income / (1.0 + policy_rate);
}

} // namespace monocity
