// Minimal CSV formatting helpers with deterministic number formatting.
#pragma once

#include <cstdio>
#include <ostream>
#include <string>

namespace monocity {

// Shortest round-trip-safe representation; identical output for identical
// doubles, which the deterministic-output contract relies on.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    double parsed = 0.0;
    std::sscanf(buf, "%lg", &parsed);
    for (int prec = 6; prec < 17; ++prec) {
        char shorter[40];
        std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
        std::sscanf(shorter, "%lg", &parsed);
        if (parsed == v) return shorter;
    }
    return buf;
}

inline std::ostream& csv_field(std::ostream& os, double v) { return os << format_double(v); }

} // namespace monocity
