#include "monocity/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace monocity {
namespace metrics {

double gini(const IncomeDistribution& dist) {
    dist.validate();
    const int k = dist.num_categories;
    double pairwise = 0.0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            pairwise += dist.shares[i] * dist.shares[j] * dist.spread * std::abs(i - j);
    return pairwise / (2.0 * dist.mean_income());
}

std::uint64_t OccupancySnapshot::total() const {
    std::uint64_t sum = 0;
    for (std::uint32_t c : counts) sum += c;
    return sum;
}

namespace {

double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -(p * std::log2(p) + (1.0 - p) * std::log2(1.0 - p));
}

// Antiderivative of E(p) = -p log2 p - (1-p) log2 (1-p).
double entropy_integral(double p) {
    double acc = p * p / 4.0 - (1.0 - p) * (1.0 - p) / 4.0;
    if (p > 0.0) acc -= p * p / 2.0 * std::log(p);
    if (p < 1.0) acc += (1.0 - p) * (1.0 - p) / 2.0 * std::log(1.0 - p);
    return acc / std::numbers::ln2;
}

} // namespace

std::optional<SegregationResult> rank_order_index(const OccupancySnapshot& snapshot) {
    const int locations = snapshot.num_locations;
    const int categories = snapshot.num_categories;
    if (locations <= 0 || categories <= 0 ||
        snapshot.counts.size() != static_cast<std::size_t>(locations) * categories)
        throw std::invalid_argument("rank_order_index: malformed snapshot");

    std::vector<std::uint64_t> totals(categories, 0);
    for (int loc = 0; loc < locations; ++loc)
        for (int c = 0; c < categories; ++c) totals[c] += snapshot.count(loc, c);
    const std::uint64_t population = [&] {
        std::uint64_t sum = 0;
        for (auto t : totals) sum += t;
        return sum;
    }();
    if (population == 0) return std::nullopt;

    std::vector<int> present;
    for (int c = 0; c < categories; ++c)
        if (totals[c] > 0) present.push_back(c);
    if (present.size() < 2) return std::nullopt;

    std::vector<double> location_totals(locations, 0.0);
    for (int loc = 0; loc < locations; ++loc) {
        double sum = 0.0;
        for (int c = 0; c < categories; ++c) sum += snapshot.count(loc, c);
        location_totals[loc] = sum;
    }

    // One cut per boundary between consecutive present categories. The cut's
    // Theil value applies to the whole rank segment below its threshold; the
    // top segment reuses the last cut, which makes the complete-segregation
    // and perfect-mixing endpoints exact.
    SegregationResult result;
    const int cuts = static_cast<int>(present.size()) - 1;
    std::vector<double> below(locations, 0.0);
    std::uint64_t below_population = 0;
    double previous_threshold = 0.0;
    for (int cut = 0; cut < cuts; ++cut) {
        const int category = present[cut];
        for (int loc = 0; loc < locations; ++loc) below[loc] += snapshot.count(loc, category);
        below_population += totals[category];

        const double p = static_cast<double>(below_population) / static_cast<double>(population);
        const double global_entropy = binary_entropy(p);
        double entropy_ratio_sum = 0.0;
        for (int loc = 0; loc < locations; ++loc) {
            if (location_totals[loc] <= 0.0) continue; // empty location: E_X = 0
            entropy_ratio_sum += binary_entropy(below[loc] / location_totals[loc]);
        }
        const double theil = 1.0 - entropy_ratio_sum / (locations * global_entropy);

        const double upper = (cut == cuts - 1) ? 1.0 : p;
        result.index += theil * (entropy_integral(upper) - entropy_integral(previous_threshold));
        previous_threshold = upper;
        result.thresholds.push_back({p, global_entropy, theil});
    }
    result.index *= 2.0 * std::numbers::ln2;
    return result;
}

OccupancySnapshot occupancy_snapshot(const SimulationRecord& record, int step) {
    if (step < 0 || step >= record.num_steps())
        throw std::out_of_range("occupancy_snapshot: step outside the record");
    OccupancySnapshot snapshot;
    snapshot.num_categories = record.occupancy_categories();
    snapshot.num_locations =
        static_cast<int>(record.occupancy_by_step[step].size()) / snapshot.num_categories;
    snapshot.counts = record.occupancy_by_step[step];
    return snapshot;
}

std::optional<WindowSegregation> window_segregation(const SimulationRecord& record, int burn_in,
                                                    int window) {
    if (record.num_steps() < burn_in + window)
        throw std::invalid_argument("window_segregation: record shorter than burn_in + window");
    WindowSegregation ws;
    double sum = 0.0;
    for (int t = burn_in; t < burn_in + window; ++t) {
        const auto result = rank_order_index(occupancy_snapshot(record, t));
        if (!result) continue;
        if (ws.defined_steps == 0) {
            ws.min = ws.max = result->index;
        } else {
            ws.min = std::min(ws.min, result->index);
            ws.max = std::max(ws.max, result->index);
        }
        sum += result->index;
        ++ws.defined_steps;
    }
    if (ws.defined_steps == 0) return std::nullopt;
    ws.mean = sum / ws.defined_steps;
    return ws;
}

std::optional<double> global_mean_price(const Summary& summary) {
    double price_sum = 0.0;
    long count = 0;
    for (const RingSummary& ring : summary.rings) {
        price_sum += ring.mean_transaction_price * ring.transaction_count;
        count += ring.transaction_count;
    }
    if (count == 0) return std::nullopt;
    return price_sum / count;
}

} // namespace metrics
} // namespace monocity
