#include <doctest.h>

#include <cmath>
#include <numeric>

#include "monocity/choice.hpp"

using namespace monocity;

TEST_SUITE_BEGIN("choice");

namespace {

CityGrid small_grid() { return CityGrid(3, 1.0, AttractivenessSpec::for_grid(3, 1.0, 3.0)); }

} // namespace

TEST_CASE("indirect utility") {
    CHECK(indirect_utility(40.0, 0.0, 40.0, 0.5, 0.5) == 0.0); // exactly at the budget
    CHECK(indirect_utility(30.0, 0.0, 40.0, 0.5, 0.5) == 0.0);
    CHECK(indirect_utility(44.0, 0.1, 40.0, 0.5, 0.5) == 0.0); // tax pushes it unaffordable
    CHECK(indirect_utility(50.0, 0.0, 40.0, 0.5, 1.0) == doctest::Approx(0.5));
    CHECK(indirect_utility(60.0, 0.0, 40.0, 0.25, 0.5) == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("choice probabilities normalize and respect zero utility") {
    const CityGrid grid = small_grid();
    std::vector<double> prices(9, 1.0);

    SUBCASE("uniform prices, beta = 1: proportional to attractiveness") {
        const auto choice = choice_probabilities(10.0, 0.0, 1.0, prices, grid);
        REQUIRE(!choice.priced_out);
        double total_attractiveness = 0.0;
        for (int i = 0; i < 9; ++i) total_attractiveness += grid.attractiveness_at(i);
        for (int i = 0; i < 9; ++i)
            CHECK(choice.probabilities[i] ==
                  doctest::Approx(grid.attractiveness_at(i) / total_attractiveness));
        CHECK(std::accumulate(choice.probabilities.begin(), choice.probabilities.end(), 0.0) ==
              doctest::Approx(1.0));
    }

    SUBCASE("same-ring locations have equal probability") {
        const auto choice = choice_probabilities(10.0, 0.0, 0.5, prices, grid);
        REQUIRE(!choice.priced_out);
        const double corner = choice.probabilities[grid.index_of(1, 1)];
        CHECK(choice.probabilities[grid.index_of(-1, 1)] == doctest::Approx(corner));
        CHECK(choice.probabilities[grid.index_of(1, -1)] == doctest::Approx(corner));
    }

    SUBCASE("unaffordable location gets probability zero") {
        prices[grid.index_of(1, 0)] = 100.0;
        const auto choice = choice_probabilities(10.0, 0.0, 0.5, prices, grid);
        REQUIRE(!choice.priced_out);
        CHECK(choice.probabilities[grid.index_of(1, 0)] == 0.0);
    }

    SUBCASE("priced out everywhere") {
        std::fill(prices.begin(), prices.end(), 50.0);
        const auto choice = choice_probabilities(10.0, 0.0, 0.5, prices, grid);
        CHECK(choice.priced_out);
        CHECK(choice.probabilities.empty());
    }
}

TEST_CASE("probabilities are scale invariant in the utility") {
    // With beta = 0 the utility is the residual budget, so scaling income and
    // prices together rescales every utility by the same factor.
    const CityGrid grid = small_grid();
    std::vector<double> prices = {1.0, 2.0, 3.0, 4.0, 5.0, 4.0, 3.0, 2.0, 1.0};
    const auto base = choice_probabilities(10.0, 0.0, 0.0, prices, grid);
    for (double& p : prices) p *= 7.0;
    const auto scaled = choice_probabilities(70.0, 0.0, 0.0, prices, grid);
    REQUIRE(!base.priced_out);
    REQUIRE(!scaled.priced_out);
    for (int i = 0; i < 9; ++i)
        CHECK(scaled.probabilities[i] == doctest::Approx(base.probabilities[i]));
}

TEST_CASE("raising a price weakly lowers its probability") {
    const CityGrid grid = small_grid();
    std::vector<double> prices(9, 1.0);
    const int target = grid.index_of(0, 1);
    const auto before = choice_probabilities(10.0, 0.0, 0.5, prices, grid);
    prices[target] = 5.0;
    const auto after = choice_probabilities(10.0, 0.0, 0.5, prices, grid);
    CHECK(after.probabilities[target] < before.probabilities[target]);
}

TEST_CASE("sampling buyers") {
    Rng rng(123);

    SUBCASE("zero count") {
        ChoiceDistribution choice{{0.5, 0.5}, false};
        const auto counts = sample_buyer_locations(0, choice, rng);
        CHECK(counts == std::vector<int>{0, 0});
    }

    SUBCASE("degenerate distribution") {
        ChoiceDistribution choice{{1.0, 0.0, 0.0}, false};
        const auto counts = sample_buyer_locations(57, choice, rng);
        CHECK(counts == std::vector<int>{57, 0, 0});
    }

    SUBCASE("priced out yields no buyers") {
        ChoiceDistribution choice;
        choice.priced_out = true;
        CHECK(sample_buyer_locations(100, choice, rng).empty());
    }

    SUBCASE("empirical shares concentrate") {
        ChoiceDistribution choice{{0.3, 0.7}, false};
        const int draws = 100000;
        const auto counts = sample_buyer_locations(draws, choice, rng);
        CHECK(counts[0] + counts[1] == draws);
        const double sigma = std::sqrt(draws * 0.3 * 0.7);
        CHECK(std::abs(counts[0] - draws * 0.3) < 3.0 * sigma);
    }
}

TEST_CASE("reservation bids") {
    CHECK(reservation_bid(15.0, 1.0, 0.0) == 15.0);
    CHECK(reservation_bid(15.0, 1.0, -0.1) == doctest::Approx(16.6667).epsilon(1e-4));
    CHECK(reservation_bid(15.0, 1.0, 0.1) == doctest::Approx(13.6364).epsilon(1e-4));

    // Strictly decreasing in the policy rate, linear in income.
    double previous = reservation_bid(15.0, 1.0, -0.5);
    for (double rate = -0.4; rate < 0.5; rate += 0.1) {
        const double bid = reservation_bid(15.0, 1.0, rate);
        CHECK(bid < previous);
        previous = bid;
    }
    CHECK(reservation_bid(30.0, 1.0, 0.2) == doctest::Approx(2.0 * reservation_bid(15.0, 1.0, 0.2)));
    CHECK(reservation_bid(15.0, 2.0, 0.0) == 30.0);
}

TEST_SUITE_END();
