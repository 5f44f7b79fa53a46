// Flat key = value configuration files. Keys follow the standard parameter
// names (alpha, mu, lambda, tau, nu, beta, gamma_total, shares, Y1, delta, K,
// N, L, R, ...); arrays are bracketed, '#' starts a comment.
#pragma once

#include <iosfwd>
#include <string>

#include "monocity/engine.hpp"

namespace monocity {

SimulationConfig parse_config(std::istream& in);
SimulationConfig load_config(const std::string& path);

// Extra analytic knob carried by the same file: gamma2 (rich arrivals for the
// two-category analysis, default gamma_total/2).
double config_rich_arrivals(std::istream& in);
double load_rich_arrivals(const std::string& path);

} // namespace monocity
