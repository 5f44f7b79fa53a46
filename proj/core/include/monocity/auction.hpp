// Per-location continuous double auction: match bids and asks, set
// transaction prices, update the location's market price.
#pragma once

#include <span>
#include <vector>

#include "monocity/rng.hpp"

namespace monocity {

struct Bid {
    int category = 0; // buyer income category (K+1 = foreign buyer)
    double price = 0.0;
};

struct Ask {
    int dwelling = -1; // index into MarketState::dwellings
    double price = 0.0;
    int listing_age = 0;
};

struct Transaction {
    int location = -1;
    int buyer_category = 0;
    int dwelling = -1;
    double bid = 0.0;
    double ask = 0.0;
    double price = 0.0; // nu*bid + (1-nu)*ask
};

// Batch: deterministic price-time matching (highest bid against lowest ask
// while they cross); maximizes the number of trades.
// Arrival: orders enter the book in a random sequence and match on arrival
// against the best resting opposite order, as in a live order book.
enum class ClearingMode { Batch, Arrival };

double transaction_price(double bid, double ask, double seller_power);

struct ClearingResult {
    std::vector<Transaction> transactions;
    std::vector<Bid> unmatched_bids;
    std::vector<Ask> unmatched_asks;
};

// `strict_crossing` requires bid > ask instead of the default bid >= ask.
// The rng is consumed only in Arrival mode.
ClearingResult clear_location(int location, std::vector<Bid> bids, std::vector<Ask> asks,
                              double seller_power, ClearingMode mode, bool strict_crossing,
                              Rng& rng);

// Mean of this step's transaction prices at the location; with no
// transactions the previous price carries forward.
double update_market_price(std::span<const Transaction> transactions, double previous_price);

} // namespace monocity
