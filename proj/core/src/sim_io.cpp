#include "monocity/sim_io.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

#include "monocity/csv.hpp"

namespace monocity {

void write_summary_csv(std::ostream& os, const Summary& summary, int num_categories) {
    os << "ring,r,mean_price";
    for (int k = 1; k <= num_categories; ++k) os << ",share_k" << k;
    os << '\n';
    for (const RingSummary& ring : summary.rings) {
        os << ring.radius2 << ',';
        csv_field(os, ring.radius) << ',';
        csv_field(os, ring.mean_price);
        for (int k = 0; k < num_categories; ++k) {
            os << ',';
            csv_field(os, ring.occupancy_shares[k]);
        }
        os << '\n';
    }
}

void write_transactions_csv(std::ostream& os, const SimulationRecord& record) {
    const CityGrid grid(record.config.linear_size, record.config.spacing,
                        record.config.attractiveness_spec());
    os << "t,x,y,k,bid,ask,price\n";
    for (const TransactionRecord& tr : record.transactions) {
        const Location loc = grid.location(tr.tx.location);
        os << tr.step << ',' << loc.x << ',' << loc.y << ',' << tr.tx.buyer_category << ',';
        csv_field(os, tr.tx.bid) << ',';
        csv_field(os, tr.tx.ask) << ',';
        csv_field(os, tr.tx.price) << '\n';
    }
}

void write_prices_csv(std::ostream& os, const SimulationRecord& record) {
    const CityGrid grid(record.config.linear_size, record.config.spacing,
                        record.config.attractiveness_spec());
    os << "t,x,y,price\n";
    for (int t = 0; t < record.num_steps(); ++t) {
        for (int i = 0; i < grid.num_locations(); ++i) {
            const Location loc = grid.location(i);
            os << (t + 1) << ',' << loc.x << ',' << loc.y << ',';
            csv_field(os, record.prices_by_step[t][i]) << '\n';
        }
    }
}

void write_occupancy_csv(std::ostream& os, const Simulation& sim) {
    const CityGrid& grid = sim.grid();
    os << "x,y,r,category,status,listing_age\n";
    for (const Dwelling& d : sim.state().dwellings) {
        const Location loc = grid.location(d.location);
        os << loc.x << ',' << loc.y << ',';
        csv_field(os, grid.radius(d.location)) << ',';
        os << d.occupant_category << ',';
        if (d.status == Occupancy::Housed)
            os << "housed,-1\n";
        else
            os << "on_market," << (sim.state().t - d.listing_time) << '\n';
    }
}

void write_curve_csv(std::ostream& os, const analytic::PriceCurve& curve) {
    os << "r,P_star,clamped_flag\n";
    for (std::size_t i = 0; i < curve.radii.size(); ++i) {
        csv_field(os, curve.radii[i]) << ',';
        csv_field(os, curve.prices[i]) << ',' << (curve.clamped[i] ? 1 : 0) << '\n';
    }
}

void write_sweep_csv(std::ostream& os, const std::vector<scenarios::RunResult>& results) {
    os << "preset,policy,replication,seed,ok,gini,HR,global_mean_price";
    if (!results.empty())
        for (int r2 : results.front().ring_radius2) os << ",price_r2_" << r2;
    os << '\n';
    for (const auto& row : results) {
        os << row.preset << ',' << row.policy << ',' << row.replication << ',' << row.seed << ','
           << (row.ok ? 1 : 0) << ',';
        csv_field(os, row.gini) << ',';
        csv_field(os, row.segregation) << ',';
        csv_field(os, row.global_mean_price);
        for (double price : row.ring_prices) {
            os << ',';
            csv_field(os, price);
        }
        os << '\n';
    }
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace monocity
