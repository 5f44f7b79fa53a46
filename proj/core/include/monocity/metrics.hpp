// Inequality and segregation measures: Gini index of the arrival income
// distribution and the rank-order information theory segregation index.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monocity/engine.hpp"
#include "monocity/population.hpp"

namespace monocity {
namespace metrics {

// Half the relative absolute mean income difference of the arrivals.
double gini(const IncomeDistribution& dist);

// Per-location housed counts by income category, ascending income order.
// Only occupants with a known category are counted.
struct OccupancySnapshot {
    int num_locations = 0;
    int num_categories = 0;
    std::vector<std::uint32_t> counts; // location-major, num_categories per location

    std::uint32_t count(int location, int category) const {
        return counts[static_cast<std::size_t>(location) * num_categories + category];
    }
    std::uint64_t total() const;
};

struct SegregationResult {
    double index = 0.0; // H^R in [0,1]
    struct Threshold {
        double population_share = 0.0; // p
        double entropy = 0.0;          // E(p)
        double theil = 0.0;            // H(p)
    };
    std::vector<Threshold> thresholds;
};

// Rank-order information theory index. Thresholds sit at the cumulative
// population shares of the categories; between consecutive thresholds the
// binary split (and hence the Theil profile H) is constant, and the integral
// of E(p)H(p) is accumulated segment by segment in closed form.
// Returns nullopt when fewer than two categories are present (the index is
// undefined: E(p) = 0 everywhere).
std::optional<SegregationResult> rank_order_index(const OccupancySnapshot& snapshot);

// Snapshot of one recorded step (0-based index into the record).
OccupancySnapshot occupancy_snapshot(const SimulationRecord& record, int step);

struct WindowSegregation {
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
    int defined_steps = 0;
};

// Time-averaged H^R over the measurement window of a record.
std::optional<WindowSegregation> window_segregation(const SimulationRecord& record, int burn_in,
                                                    int window);

// Transaction-weighted mean price over the summary's measurement window;
// nullopt when no transactions occurred.
std::optional<double> global_mean_price(const Summary& summary);

} // namespace metrics
} // namespace monocity
