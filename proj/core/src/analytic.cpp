#include "monocity/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace monocity {
namespace analytic {

double Params::effective_discount() const {
    return std::pow(ask_discount, 1.0 / revision_period);
}

void Params::validate() const {
    if (dwelling_density <= 0.0) throw std::invalid_argument("analytic: n must be positive");
    if (arrivals < 0.0) throw std::invalid_argument("analytic: arrivals must be nonnegative");
    if (sale_rate <= 0.0 || sale_rate > 1.0)
        throw std::invalid_argument("analytic: alpha must be in (0,1]");
    if (markup < 0.0) throw std::invalid_argument("analytic: mu must be nonnegative");
    if (seller_power < 0.0 || seller_power > 1.0)
        throw std::invalid_argument("analytic: nu must be in [0,1]");
    if (ask_discount <= 0.0 || ask_discount > 1.0)
        throw std::invalid_argument("analytic: lambda must be in (0,1]");
    if (revision_period < 1) throw std::invalid_argument("analytic: tau must be >= 1");
    if (income <= 0.0) throw std::invalid_argument("analytic: income must be positive");
    if (attract.steepness <= 0.0 || attract.city_radius < 0.0)
        throw std::invalid_argument("analytic: bad attractiveness spec");
    if (effective_discount() >= 1.0)
        throw std::invalid_argument("analytic: lambda^(1/tau) must be < 1 for a steady state");
}

namespace {

// Adaptive Simpson on [a,b] to the given relative tolerance.
double adaptive_simpson(double (*f)(double, const AttractivenessSpec&),
                        const AttractivenessSpec& spec, double a, double b, double fa, double fm,
                        double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm, spec), frm = f(rm, spec);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol * std::abs(left + right))
        return left + right + delta / 15.0;
    return adaptive_simpson(f, spec, a, m, fa, flm, fm, left, tol, depth - 1) +
           adaptive_simpson(f, spec, m, b, fm, frm, fb, right, tol, depth - 1);
}

double ring_weighted_attractiveness(double r, const AttractivenessSpec& spec) {
    return r * attractiveness(r, spec);
}

// Unconstrained Eq.-10-style price for buyer density x = Gamma*A/Z (or its
// general-utility analogue). Returns the income (clamped) whenever the
// steady-state assumptions break: oversubscribed market (n_s* <= 0 or
// q* >= 1), nonpositive denominator, or a value above the income.
PricePoint price_from_buyer_density(double x, const Params& params) {
    const double n = params.dwelling_density;
    const double alpha = params.sale_rate;
    const double s = params.effective_discount();
    const double y = params.income;

    const double sellers = n - (1.0 - alpha) / alpha * x;
    if (sellers <= 0.0 || x >= sellers) return {y, true};

    const double d = n * (1.0 - s) - x / alpha * (1.0 - alpha - s);
    const double denom = d - (1.0 - params.seller_power) * (1.0 + params.markup) * x;
    if (denom <= 0.0) return {y, true};
    const double price = params.seller_power * y * d / denom;
    if (price > y) return {y, true};
    return {price, false};
}

} // namespace

double normalization_constant(const Params& params) {
    const double r_steep = params.attract.steepness;
    const double r_max = params.attract.city_radius;
    if (r_max <= 0.0) return 0.0;
    const double ratio = r_max / r_steep;
    return std::numbers::pi * r_steep * r_steep * (1.0 - std::exp(-ratio * ratio));
}

double normalization_constant_quadrature(const Params& params) {
    const double r_max = params.attract.city_radius;
    if (r_max <= 0.0) return 0.0;
    const double fa = ring_weighted_attractiveness(0.0, params.attract);
    const double fb = ring_weighted_attractiveness(r_max, params.attract);
    const double fm = ring_weighted_attractiveness(0.5 * r_max, params.attract);
    const double whole = r_max / 6.0 * (fa + 4.0 * fm + fb);
    return 2.0 * std::numbers::pi *
           adaptive_simpson(ring_weighted_attractiveness, params.attract, 0.0, r_max, fa, fm, fb,
                            whole, 1e-10, 48);
}

SteadyDensities steady_densities(double r, const Params& params) {
    params.validate();
    const double z = normalization_constant(params);
    SteadyDensities d;
    d.buyers = z > 0.0 ? params.arrivals * attractiveness(r, params.attract) / z : 0.0;
    d.sellers = params.dwelling_density - (1.0 - params.sale_rate) / params.sale_rate * d.buyers;
    d.tightness = d.sellers > 0.0 ? d.buyers / d.sellers : std::numeric_limits<double>::infinity();
    d.valid = d.sellers > 0.0 && d.tightness > 0.0 && d.tightness < 1.0;
    return d;
}

double expected_discount(double tightness, double ask_discount, int revision_period) {
    if (tightness <= 0.0 || tightness > 1.0)
        throw std::invalid_argument("expected_discount: sale probability must be in (0,1]");
    if (ask_discount <= 0.0 || ask_discount > 1.0 || revision_period < 1)
        throw std::invalid_argument("expected_discount: bad discount parameters");
    const double s = std::pow(ask_discount, 1.0 / revision_period);
    return tightness / (1.0 - s * (1.0 - tightness));
}

PricePoint steady_price(double r, const Params& params) {
    params.validate();
    const double z = normalization_constant(params);
    const double x = z > 0.0 ? params.arrivals * attractiveness(r, params.attract) / z : 0.0;
    return price_from_buyer_density(x, params);
}

PriceCurve solve_price_curve(const Params& params, double attractiveness_weight,
                             const SolveOptions& options) {
    params.validate();
    if (attractiveness_weight < 0.0 || attractiveness_weight > 1.0)
        throw std::invalid_argument("solve_price_curve: beta must be in [0,1]");
    if (options.grid_points < 2) throw std::invalid_argument("solve_price_curve: grid too small");

    const double beta = attractiveness_weight;
    const double y = params.income;
    const double r_max = params.attract.city_radius;
    const int points = options.grid_points;
    const double h = r_max / points;

    PriceCurve curve;
    curve.radii.resize(points + 1);
    curve.prices.assign(points + 1, 0.0);
    curve.clamped.assign(points + 1, false);
    std::vector<double> attract_pow(points + 1);
    for (int i = 0; i <= points; ++i) {
        curve.radii[i] = i * h;
        attract_pow[i] = std::pow(attractiveness(curve.radii[i], params.attract), beta);
    }

    // Steady-state utility at consumption y - p; 0^0 = 1 keeps the beta = 1
    // case equal to the plain attractiveness even at clamped points.
    auto utility = [&](double p, int i) {
        const double consumption = std::max(y - p, 0.0);
        return std::pow(consumption, 1.0 - beta) * attract_pow[i];
    };

    double z_star = normalization_constant(params); // beta = 1 closed form as the start
    curve.converged = false;
    for (int iter = 1; iter <= options.max_iterations; ++iter) {
        curve.iterations = iter;
        for (int i = 0; i <= points; ++i) {
            // Residual g(p) = p - F(p) changes sign on [0, Y]: g(0) <= 0 and
            // g(Y) = Y - nu*Y >= 0, so bisection always brackets a root.
            auto excess = [&](double p) {
                const double x = params.arrivals * utility(p, i) / z_star;
                return p - price_from_buyer_density(x, params).price;
            };
            double lo = 0.0, hi = y;
            if (excess(0.0) >= 0.0) {
                hi = 0.0;
            } else {
                while (hi - lo > options.price_tolerance) {
                    const double mid = 0.5 * (lo + hi);
                    (excess(mid) < 0.0 ? lo : hi) = mid;
                }
            }
            const double p = 0.5 * (lo + hi);
            const double x = params.arrivals * utility(p, i) / z_star;
            const PricePoint point = price_from_buyer_density(x, params);
            curve.prices[i] = point.clamped ? y : p;
            curve.clamped[i] = point.clamped;
        }

        // Trapezoidal Z* update over the uniform grid.
        double z_next = 0.0;
        for (int i = 0; i <= points; ++i) {
            const double w = (i == 0 || i == points) ? 0.5 : 1.0;
            z_next += w * curve.radii[i] * utility(curve.prices[i], i);
        }
        z_next *= 2.0 * std::numbers::pi * h;

        if (z_next <= 0.0) { // fully clamped city: utilities vanish everywhere
            curve.normalization = 0.0;
            curve.converged = true;
            return curve;
        }
        const double rel_change = std::abs(z_next - z_star) / z_next;
        z_star = z_next;
        curve.normalization = z_star;
        if (rel_change < options.tolerance) {
            curve.converged = true;
            break;
        }
    }
    return curve;
}

SegregationRadius segregation_radius(const TwoCategoryParams& params) {
    params.base.validate();
    if (params.income_gap <= 0.0)
        throw std::invalid_argument("segregation_radius: income gap must be positive");
    if (params.rich_arrivals <= 0.0)
        throw std::invalid_argument("segregation_radius: rich arrivals must be positive");

    const Params& base = params.base;
    const double y1 = base.income;
    const double gap_ratio = params.income_gap / y1; // Delta/Y1
    const double s = base.effective_discount();
    const double alpha = base.sale_rate;
    const double nu = base.seller_power;
    const double r_steep = base.attract.steepness;
    const double r_max = base.attract.city_radius;

    SegregationRadius result;
    const double budget_slack = 1.0 - nu - nu * gap_ratio; // (Y1 - nu*Y2)/Y1
    if (budget_slack <= 0.0) {
        result.regime = SegregationRegime::Invalid;
        return result;
    }

    // Boundary condition P*(r_s) = Y1 of the one-category solution evaluated
    // at the rich income Y2 = Y1(1+Delta/Y1) and arrival rate Gamma_2.
    const double markup_term = (1.0 + base.markup) * (1.0 - nu);
    const double bracket =
        (markup_term + (1.0 - alpha - s) / alpha) / (1.0 + gap_ratio) -
        nu / alpha * (1.0 - alpha - s);
    Params rich = base;
    rich.income = y1 * (1.0 + gap_ratio);
    const double z = normalization_constant(rich);
    const double denominator =
        z * base.dwelling_density * (1.0 - s) * budget_slack / (1.0 + gap_ratio);
    const double argument = params.rich_arrivals * bracket / denominator;

    if (!(argument > 0.0)) {
        result.regime = SegregationRegime::Invalid;
        return result;
    }
    if (argument <= 1.0) {
        result.regime = SegregationRegime::NoRegion;
        return result;
    }
    result.raw_radius = r_steep * std::sqrt(std::log(argument));
    if (result.raw_radius > r_max) {
        result.radius = r_max;
        result.regime = SegregationRegime::WholeCity;
    } else {
        result.radius = result.raw_radius;
        result.regime = SegregationRegime::Region;
    }
    return result;
}

} // namespace analytic
} // namespace monocity
