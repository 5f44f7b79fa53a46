// Supply side: aspiration-level reservation offer prices.
#pragma once

#include <stdexcept>

namespace monocity {

// (1+markup) * base * discount^floor(age/revision_period): the seller tries a
// markup over the market price frozen at listing time and cuts the ask by a
// factor `discount` after every `revision_period` unsuccessful steps.
inline double reservation_offer(double base_price, int listing_age, double markup, double discount,
                                int revision_period) {
    if (base_price < 0.0 || listing_age < 0) throw std::invalid_argument("reservation_offer: bad inputs");
    if (discount <= 0.0 || discount > 1.0)
        throw std::invalid_argument("reservation_offer: discount must be in (0,1]");
    if (revision_period < 1) throw std::invalid_argument("reservation_offer: revision period must be >= 1");
    if (markup < 0.0) throw std::invalid_argument("reservation_offer: markup must be nonnegative");
    double ask = (1.0 + markup) * base_price;
    for (int m = listing_age / revision_period; m > 0; --m) ask *= discount;
    return ask;
}

} // namespace monocity
