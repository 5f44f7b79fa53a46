// Continuum steady-state solutions of the market model: closed form for the
// attractiveness-only case, an iterative solver for the general utility, and
// the segregation radius for two income categories. Serves as the
// simulation-independent oracle.
#pragma once

#include <vector>

#include "monocity/geometry.hpp"

namespace monocity {
namespace analytic {

struct Params {
    double dwelling_density = 100.0; // n = N/a^2
    double arrivals = 1000.0;        // buyers per step (Gamma)
    double sale_rate = 0.1;          // alpha
    double markup = 0.1;             // mu
    double seller_power = 0.1;       // nu
    double ask_discount = 0.95;      // lambda
    int revision_period = 2;         // tau
    double income = 15.0;            // Y (single category)
    AttractivenessSpec attract{3.0, 6.20608542, false}; // city radius 11/sqrt(pi)

    double effective_discount() const; // lambda^(1/tau)
    void validate() const;             // throws std::invalid_argument
};

// Z = 2*pi * integral_0^R_max r A(r) dr, in closed form for the Gaussian
// profile. The quadrature variant evaluates the same integral by adaptive
// Simpson (relative tolerance 1e-10) and serves as an independent cross-check.
double normalization_constant(const Params& params);
double normalization_constant_quadrature(const Params& params);

struct SteadyDensities {
    double buyers = 0.0;     // n_b*
    double sellers = 0.0;    // n_s*
    double tightness = 0.0;  // q* = n_b*/n_s*
    bool valid = false;      // q* in (0,1)
};

SteadyDensities steady_densities(double r, const Params& params);

// Expected discount factor at sale for per-step sale probability q:
// q / (1 - lambda^(1/tau) (1-q)). Throws for q <= 0.
double expected_discount(double tightness, double ask_discount, int revision_period);

struct PricePoint {
    double price = 0.0;
    bool clamped = false; // steady state would exceed the buyers' income
};

// Attractiveness-only (beta = 1) steady-state price at distance r, clamped to
// the income whenever the unconstrained expression exceeds it or the
// steady-state assumptions fail.
PricePoint steady_price(double r, const Params& params);

struct SolveOptions {
    int grid_points = 10000;   // uniform r-grid on (0, R_max]
    double tolerance = 1e-8;   // relative change in Z* between sweeps
    int max_iterations = 500;
    double price_tolerance = 1e-10; // bisection tolerance per grid point
};

struct PriceCurve {
    std::vector<double> radii;
    std::vector<double> prices;
    std::vector<bool> clamped;
    double normalization = 0.0; // converged Z*
    int iterations = 0;
    bool converged = false;
};

// General-utility steady state: fixed-point iteration on the normalization
// Z*, solving the per-radius scalar equation by bisection on [0, Y] and
// recomputing Z* by trapezoidal quadrature each sweep.
PriceCurve solve_price_curve(const Params& params, double attractiveness_weight,
                             const SolveOptions& options = {});

struct TwoCategoryParams {
    Params base;                 // base.income is the poor income Y1
    double income_gap = 5.0;     // Delta, rich income = Y1 + Delta
    double rich_arrivals = 500.0; // Gamma_2
};

enum class SegregationRegime {
    Region,    // 0 < r_s <= R_max
    NoRegion,  // formula argument <= 1: no segregated disc
    WholeCity, // r_s beyond R_max, clipped
    Invalid,   // preconditions violated (e.g. 1 - nu - nu*Delta/Y1 <= 0)
};

struct SegregationRadius {
    double radius = 0.0;     // clipped to [0, R_max]
    double raw_radius = 0.0; // unclipped formula value (0 when undefined)
    SegregationRegime regime = SegregationRegime::Invalid;
};

// Radius of the central disc only affordable to the rich category.
SegregationRadius segregation_radius(const TwoCategoryParams& params);

} // namespace analytic
} // namespace monocity
