#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "monocity/analytic.hpp"
#include "monocity/engine.hpp"
#include "monocity/metrics.hpp"

using namespace monocity;

TEST_SUITE_BEGIN("engine");

namespace {

SimulationConfig baseline() { return SimulationConfig{}; }

SimulationConfig single_category_beta1() {
    SimulationConfig config;
    config.incomes = {1, 15.0, 5.0, {1.0}, 1000};
    config.policy = PolicyVector::none(1);
    config.utility_attractiveness_weight = 1.0;
    return config;
}

analytic::Params analytic_from(const SimulationConfig& config) {
    analytic::Params p;
    p.dwelling_density =
        config.dwellings_per_location / (config.spacing * config.spacing);
    p.arrivals = config.incomes.arrivals_per_step;
    p.sale_rate = config.sale_rate;
    p.markup = config.markup;
    p.seller_power = config.seller_power;
    p.ask_discount = config.ask_discount;
    p.revision_period = config.revision_period;
    p.income = config.incomes.income(1);
    p.attract = config.attractiveness_spec();
    return p;
}

} // namespace

TEST_CASE("defaults reproduce the standard parameter table") {
    const SimulationConfig config = baseline();
    config.validate();
    CHECK(config.dwellings_per_location == 100);
    CHECK(config.linear_size == 11);
    CHECK(config.spacing == 1.0);
    CHECK(config.attractiveness_steepness == 3.0);
    CHECK(config.incomes.num_categories == 10);
    CHECK(config.incomes.base_income == 15.0);
    CHECK(config.incomes.spread == 5.0);
    CHECK(config.utility_attractiveness_weight == 0.5);
    CHECK(config.sale_rate == 0.1);
    CHECK(config.markup == 0.1);
    CHECK(config.ask_discount == 0.95);
    CHECK(config.revision_period == 2);
    CHECK(config.seller_power == 0.1);
    CHECK(config.incomes.arrivals_per_step == 1000);
    CHECK(config.default_initial_price() == doctest::Approx(0.1 * 27.65));
}

TEST_CASE("zero demand and zero listings form a fixed point") {
    SimulationConfig config = baseline();
    config.incomes.arrivals_per_step = 0;
    config.sale_rate = 0.0;
    config.horizon = 5;
    Simulation sim(config, 1);
    const auto record = sim.run();
    REQUIRE(record.num_steps() == 5);
    for (const auto& prices : record.prices_by_step)
        for (double p : prices) CHECK(p == config.default_initial_price());
    CHECK(record.transactions.empty());
    for (const auto& d : sim.state().dwellings) CHECK(d.status == Occupancy::Housed);
}

TEST_CASE("horizon zero yields an empty record") {
    SimulationConfig config = baseline();
    config.horizon = 0;
    CHECK(run_simulation(config, 3).num_steps() == 0);
}

TEST_CASE("identical seeds reproduce the run bit for bit") {
    SimulationConfig config = baseline();
    config.horizon = 20;
    const auto a = run_simulation(config, 42);
    const auto b = run_simulation(config, 42);
    REQUIRE(a.transactions.size() == b.transactions.size());
    for (std::size_t i = 0; i < a.transactions.size(); ++i) {
        CHECK(a.transactions[i].step == b.transactions[i].step);
        CHECK(a.transactions[i].tx.location == b.transactions[i].tx.location);
        CHECK(a.transactions[i].tx.dwelling == b.transactions[i].tx.dwelling);
        CHECK(a.transactions[i].tx.price == b.transactions[i].tx.price);
    }
    CHECK(a.prices_by_step == b.prices_by_step);
    CHECK(a.occupancy_by_step == b.occupancy_by_step);

    const auto c = run_simulation(config, 43);
    CHECK(a.prices_by_step != c.prices_by_step);
}

TEST_CASE("dwelling bookkeeping stays consistent") {
    SimulationConfig config = baseline();
    config.horizon = 30;
    Simulation sim(config, 7);
    sim.run();
    const MarketState& state = sim.state();
    REQUIRE(state.dwellings.size() == 121u * 100u);
    std::vector<int> per_location(121, 0);
    for (const auto& d : state.dwellings) {
        ++per_location[d.location];
        if (d.status == Occupancy::OnMarket) {
            CHECK(d.listing_time >= 0);
            CHECK(d.listing_time <= state.t);
            CHECK(d.listing_base_price >= 0.0);
        } else {
            CHECK(d.listing_time == -1);
        }
    }
    for (int count : per_location) CHECK(count == 100);
}

TEST_CASE("occupancy changes equal transactions") {
    SimulationConfig config = baseline();
    config.horizon = 1;
    Simulation sim(config, 11);
    sim.step();
    const auto& record = sim.record();
    std::uint64_t housed_known = 0;
    for (auto c : record.occupancy_by_step[0]) housed_known += c;
    CHECK(housed_known == record.transactions.size());
}

TEST_CASE("transaction prices never exceed the best bid in the market") {
    SimulationConfig config = baseline();
    config.horizon = 40;
    const auto record = run_simulation(config, 17);
    const double ceiling =
        reservation_bid(config.incomes.income(10), config.bid_multiplier, config.policy.rate(10));
    REQUIRE(!record.transactions.empty());
    for (const auto& tr : record.transactions) {
        CHECK(tr.tx.price <= ceiling + 1e-12);
        CHECK(tr.tx.ask <= tr.tx.bid + 1e-12);
    }
}

TEST_CASE("foreign influx records the extra category and respects its budget") {
    SimulationConfig config = baseline();
    config.foreign_influx = true;
    config.horizon = 30;
    const auto record = run_simulation(config, 5);
    const int foreign = config.foreign_category();
    CHECK(config.foreign_income() == doctest::Approx(65.0));

    bool saw_foreign = false;
    double ceiling = config.foreign_income();
    for (const auto& tr : record.transactions) {
        if (tr.tx.buyer_category == foreign) {
            saw_foreign = true;
            CHECK(tr.tx.bid == doctest::Approx(65.0));
            // Foreign buyers search only inside the central disc.
            const CityGrid grid(config.linear_size, config.spacing, config.attractiveness_spec());
            CHECK(grid.radius2(tr.tx.location) <= config.foreign_search_radius2);
        }
        CHECK(tr.tx.price <= ceiling + 1e-12);
    }
    CHECK(saw_foreign);
}

TEST_CASE("single-category attractiveness-only run tracks the steady state") {
    SimulationConfig config = single_category_beta1();
    const auto record = run_simulation(config, 2);
    const Summary summary = summarize(record);
    const analytic::Params params = analytic_from(config);

    // Center: the steady state clamps to the income; the simulated ring mean
    // must sit within 10% below it.
    const auto center = analytic::steady_price(0.0, params);
    CHECK(center.clamped);
    CHECK(center.price == 15.0);
    CHECK(summary.rings.front().mean_price > 0.9 * center.price);
    CHECK(summary.rings.front().mean_price <= center.price);

    SUBCASE("ring prices decrease outward") {
        double previous = summary.rings.front().mean_price;
        for (std::size_t ring = 1; ring < summary.rings.size(); ++ring) {
            CHECK(summary.rings[ring].mean_price < previous * 1.05);
            previous = std::min(previous, summary.rings[ring].mean_price);
        }
        CHECK(summary.rings.back().mean_price < 0.3 * summary.rings.front().mean_price);
    }
}

TEST_CASE("summaries") {
    SUBCASE("constant price field") {
        SimulationConfig config = baseline();
        config.incomes.arrivals_per_step = 0;
        config.sale_rate = 0.0;
        config.horizon = 4;
        const auto record = run_simulation(config, 1);
        const Summary summary = summarize(record, 2, 2);
        for (const auto& ring : summary.rings)
            CHECK(ring.mean_price == doctest::Approx(config.default_initial_price()));
    }

    SUBCASE("window of one step") {
        SimulationConfig config = baseline();
        config.horizon = 3;
        const auto record = run_simulation(config, 9);
        const Summary summary = summarize(record, 2, 1);
        const CityGrid grid(config.linear_size, config.spacing, config.attractiveness_spec());
        double expected = 0.0;
        for (int idx : grid.rings()[0]) expected += record.prices_by_step[2][idx];
        CHECK(summary.rings[0].mean_price == doctest::Approx(expected / grid.rings()[0].size()));
    }

    SUBCASE("insufficient horizon throws") {
        SimulationConfig config = baseline();
        config.horizon = 10;
        const auto record = run_simulation(config, 1);
        CHECK_THROWS(summarize(record, 50, 100));
    }
}

TEST_CASE("ring price spread across seeds stays small at baseline") {
    SimulationConfig config = baseline();
    std::vector<Summary> summaries;
    for (std::uint64_t seed : {101u, 202u, 303u})
        summaries.push_back(summarize(run_simulation(config, seed)));
    for (std::size_t ring = 0; ring < summaries.front().rings.size(); ++ring) {
        double lo = summaries[0].rings[ring].mean_price, hi = lo;
        for (const auto& s : summaries) {
            lo = std::min(lo, s.rings[ring].mean_price);
            hi = std::max(hi, s.rings[ring].mean_price);
        }
        CHECK((hi - lo) / (0.5 * (hi + lo)) < 0.05);
    }
}

TEST_CASE("initialization is forgotten by the burn-in") {
    SimulationConfig low = baseline();
    SimulationConfig high = baseline();
    high.initial_price = 30.0; // default is ~2.77
    const Summary a = summarize(run_simulation(low, 55));
    const Summary b = summarize(run_simulation(high, 55));
    for (std::size_t ring = 0; ring < a.rings.size(); ++ring) {
        const double rel = std::abs(a.rings[ring].mean_price - b.rings[ring].mean_price) /
                           a.rings[ring].mean_price;
        CHECK(rel < 0.05);
    }
}

TEST_CASE("initial occupants can be seeded from the arrival distribution") {
    SimulationConfig config = baseline();
    config.seed_initial_occupants = true;
    config.horizon = 1;
    Simulation sim(config, 3);
    sim.step();
    const auto snapshot = metrics::occupancy_snapshot(sim.record(), 0);
    CHECK(snapshot.total() >= 121u * 100u); // everyone counted from the start
}

TEST_SUITE_END();
