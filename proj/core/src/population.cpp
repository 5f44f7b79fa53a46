#include "monocity/population.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace monocity {

double IncomeDistribution::mean_income() const {
    double acc = 0.0;
    for (int k = 1; k <= num_categories; ++k) acc += shares[k - 1] * income(k);
    return acc;
}

void IncomeDistribution::validate() const {
    if (num_categories < 1) throw std::invalid_argument("IncomeDistribution: K must be >= 1");
    if (base_income <= 0.0) throw std::invalid_argument("IncomeDistribution: base income must be positive");
    if (spread <= 0.0 && num_categories > 1)
        throw std::invalid_argument("IncomeDistribution: spread must be positive");
    if (static_cast<int>(shares.size()) != num_categories)
        throw std::invalid_argument("IncomeDistribution: shares size must equal K");
    double sum = 0.0;
    for (double s : shares) {
        if (s < 0.0) throw std::invalid_argument("IncomeDistribution: shares must be nonnegative");
        sum += s;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("IncomeDistribution: shares must sum to 1");
    if (arrivals_per_step < 0)
        throw std::invalid_argument("IncomeDistribution: arrivals must be nonnegative");
}

std::vector<int> arrival_counts(const IncomeDistribution& dist) {
    const int k = dist.num_categories;
    std::vector<int> counts(k);
    std::vector<std::pair<double, int>> remainders(k);
    int assigned = 0;
    for (int i = 0; i < k; ++i) {
        const double exact = dist.arrivals_per_step * dist.shares[i];
        counts[i] = static_cast<int>(std::floor(exact));
        assigned += counts[i];
        remainders[i] = {exact - counts[i], i};
    }
    // Largest remainder first; ties broken by category index for determinism.
    std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    for (int left = dist.arrivals_per_step - assigned, i = 0; left > 0; --left, ++i)
        ++counts[remainders[i % k].second];
    return counts;
}

void spawn_listings(MarketState& state, double sale_rate, Rng& rng) {
    if (sale_rate < 0.0 || sale_rate > 1.0)
        throw std::invalid_argument("spawn_listings: sale rate must be in [0,1]");
    for (auto& d : state.dwellings) {
        if (d.status != Occupancy::Housed) continue;
        if (bernoulli(sale_rate, rng)) {
            d.status = Occupancy::OnMarket;
            d.listing_time = state.t;
            d.listing_base_price = state.prices[d.location];
        }
    }
}

} // namespace monocity
