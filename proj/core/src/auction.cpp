#include "monocity/auction.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace monocity {

double transaction_price(double bid, double ask, double seller_power) {
    if (seller_power < 0.0 || seller_power > 1.0)
        throw std::invalid_argument("transaction_price: seller power must be in [0,1]");
    return seller_power * bid + (1.0 - seller_power) * ask;
}

namespace {

bool crosses(double bid, double ask, bool strict) { return strict ? bid > ask : bid >= ask; }

ClearingResult clear_batch(int location, std::vector<Bid> bids, std::vector<Ask> asks,
                           double seller_power, bool strict_crossing) {
    // Price priority; ties by category on the bid side and by time on market
    // (older first) on the ask side, so runs are reproducible.
    std::stable_sort(bids.begin(), bids.end(), [](const Bid& a, const Bid& b) {
        if (a.price != b.price) return a.price > b.price;
        return a.category < b.category;
    });
    std::stable_sort(asks.begin(), asks.end(), [](const Ask& a, const Ask& b) {
        if (a.price != b.price) return a.price < b.price;
        if (a.listing_age != b.listing_age) return a.listing_age > b.listing_age;
        return a.dwelling < b.dwelling;
    });

    ClearingResult result;
    std::size_t i = 0;
    while (i < bids.size() && i < asks.size() && crosses(bids[i].price, asks[i].price, strict_crossing)) {
        result.transactions.push_back({location, bids[i].category, asks[i].dwelling, bids[i].price,
                                       asks[i].price,
                                       transaction_price(bids[i].price, asks[i].price, seller_power)});
        ++i;
    }
    result.unmatched_bids.assign(bids.begin() + i, bids.end());
    result.unmatched_asks.assign(asks.begin() + i, asks.end());
    return result;
}

ClearingResult clear_arrival(int location, std::vector<Bid> bids, std::vector<Ask> asks,
                             double seller_power, bool strict_crossing, Rng& rng) {
    struct Order {
        bool is_bid;
        std::size_t index;
    };
    std::vector<Order> sequence;
    sequence.reserve(bids.size() + asks.size());
    for (std::size_t i = 0; i < bids.size(); ++i) sequence.push_back({true, i});
    for (std::size_t i = 0; i < asks.size(); ++i) sequence.push_back({false, i});
    for (std::size_t i = sequence.size(); i > 1; --i)
        std::swap(sequence[i - 1], sequence[static_cast<std::size_t>(uniform01(rng) * i)]);

    // Resting books keyed by (price, arrival order); earlier orders win ties.
    struct Resting {
        double price;
        std::size_t arrival;
        std::size_t index;
    };
    auto bid_worse = [](const Resting& a, const Resting& b) {
        if (a.price != b.price) return a.price < b.price;
        return a.arrival > b.arrival;
    };
    auto ask_worse = [](const Resting& a, const Resting& b) {
        if (a.price != b.price) return a.price > b.price;
        return a.arrival > b.arrival;
    };
    std::priority_queue<Resting, std::vector<Resting>, decltype(bid_worse)> resting_bids(bid_worse);
    std::priority_queue<Resting, std::vector<Resting>, decltype(ask_worse)> resting_asks(ask_worse);

    ClearingResult result;
    for (std::size_t seq = 0; seq < sequence.size(); ++seq) {
        const Order order = sequence[seq];
        if (order.is_bid) {
            const Bid& bid = bids[order.index];
            if (!resting_asks.empty() && crosses(bid.price, resting_asks.top().price, strict_crossing)) {
                const Ask& ask = asks[resting_asks.top().index];
                resting_asks.pop();
                result.transactions.push_back({location, bid.category, ask.dwelling, bid.price, ask.price,
                                               transaction_price(bid.price, ask.price, seller_power)});
            } else {
                resting_bids.push({bid.price, seq, order.index});
            }
        } else {
            const Ask& ask = asks[order.index];
            if (!resting_bids.empty() && crosses(resting_bids.top().price, ask.price, strict_crossing)) {
                const Bid& bid = bids[resting_bids.top().index];
                resting_bids.pop();
                result.transactions.push_back({location, bid.category, ask.dwelling, bid.price, ask.price,
                                               transaction_price(bid.price, ask.price, seller_power)});
            } else {
                resting_asks.push({ask.price, seq, order.index});
            }
        }
    }
    while (!resting_bids.empty()) {
        result.unmatched_bids.push_back(bids[resting_bids.top().index]);
        resting_bids.pop();
    }
    while (!resting_asks.empty()) {
        result.unmatched_asks.push_back(asks[resting_asks.top().index]);
        resting_asks.pop();
    }
    return result;
}

} // namespace

ClearingResult clear_location(int location, std::vector<Bid> bids, std::vector<Ask> asks,
                              double seller_power, ClearingMode mode, bool strict_crossing,
                              Rng& rng) {
    if (mode == ClearingMode::Batch)
        return clear_batch(location, std::move(bids), std::move(asks), seller_power, strict_crossing);
    return clear_arrival(location, std::move(bids), std::move(asks), seller_power, strict_crossing, rng);
}

double update_market_price(std::span<const Transaction> transactions, double previous_price) {
    if (transactions.empty()) return previous_price;
    double sum = 0.0;
    for (const Transaction& tx : transactions) sum += tx.price;
    return sum / static_cast<double>(transactions.size());
}

} // namespace monocity
