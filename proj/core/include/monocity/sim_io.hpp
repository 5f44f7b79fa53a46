// CSV emission for simulation outputs. All writers are deterministic:
// identical inputs produce byte-identical files.
#pragma once

#include <iosfwd>
#include <string>

#include "monocity/analytic.hpp"
#include "monocity/engine.hpp"
#include "monocity/scenarios.hpp"

namespace monocity {

// ring, r, mean_price, share_k1..share_kK
void write_summary_csv(std::ostream& os, const Summary& summary, int num_categories);
// t, x, y, k, bid, ask, price
void write_transactions_csv(std::ostream& os, const SimulationRecord& record);
// t, x, y, price
void write_prices_csv(std::ostream& os, const SimulationRecord& record);
// x, y, r, category, status, listing_age  (final state of a simulation)
void write_occupancy_csv(std::ostream& os, const Simulation& sim);
// r, P_star, clamped_flag
void write_curve_csv(std::ostream& os, const analytic::PriceCurve& curve);
// preset, policy, replication, seed, ok, gini, HR, global_mean_price, ring columns
void write_sweep_csv(std::ostream& os, const std::vector<scenarios::RunResult>& results);

void write_file(const std::string& path, const std::string& contents);

} // namespace monocity
