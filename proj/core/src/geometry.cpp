#include "monocity/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "monocity/csv.hpp"

namespace monocity {

double default_city_radius(int linear_size, double spacing) {
    return spacing * linear_size / std::sqrt(std::numbers::pi);
}

AttractivenessSpec AttractivenessSpec::for_grid(int linear_size, double spacing, double steepness,
                                                bool cutoff_enabled) {
    AttractivenessSpec spec;
    spec.steepness = steepness;
    spec.city_radius = default_city_radius(linear_size, spacing);
    spec.cutoff_enabled = cutoff_enabled;
    return spec;
}

double attractiveness(double r, const AttractivenessSpec& spec) {
    if (spec.cutoff_enabled && r > spec.city_radius) return 0.0;
    const double z = r / spec.steepness;
    return std::exp(-z * z);
}

CityGrid::CityGrid(int linear_size, double spacing, AttractivenessSpec spec)
    : linear_size_(linear_size), spacing_(spacing), spec_(spec) {
    if (linear_size < 3 || linear_size % 2 == 0)
        throw std::invalid_argument("CityGrid: linear size must be odd and >= 3");
    if (spacing <= 0.0) throw std::invalid_argument("CityGrid: spacing must be positive");
    if (spec.steepness <= 0.0 || spec.city_radius <= 0.0)
        throw std::invalid_argument("CityGrid: attractiveness parameters must be positive");

    const int half = (linear_size - 1) / 2;
    const int n = linear_size * linear_size;
    locations_.reserve(n);
    radius2_.reserve(n);
    radius_.reserve(n);
    attractiveness_.reserve(n);
    ring_index_.resize(n);

    std::map<int, std::vector<int>> rings;
    for (int y = -half; y <= half; ++y) {
        for (int x = -half; x <= half; ++x) {
            const int idx = static_cast<int>(locations_.size());
            locations_.push_back({x, y});
            const int r2 = x * x + y * y;
            radius2_.push_back(r2);
            const double r = spacing * std::sqrt(static_cast<double>(r2));
            radius_.push_back(r);
            attractiveness_.push_back(attractiveness(r, spec_));
            rings[r2].push_back(idx);
        }
    }
    for (auto& [r2, members] : rings) {
        const int ring = static_cast<int>(ring_radius2_.size());
        for (int idx : members) ring_index_[idx] = ring;
        ring_radius2_.push_back(r2);
        ring_members_.push_back(std::move(members));
    }
}

int CityGrid::index_of(int x, int y) const {
    const int half = (linear_size_ - 1) / 2;
    if (x < -half || x > half || y < -half || y > half)
        throw std::out_of_range("CityGrid: coordinates outside the grid");
    return (y + half) * linear_size_ + (x + half);
}

double CityGrid::ring_radius(int ring) const {
    return spacing_ * std::sqrt(static_cast<double>(ring_radius2_.at(ring)));
}

void CityGrid::write_csv(std::ostream& os) const {
    os << "x,y,r,A\n";
    for (int i = 0; i < num_locations(); ++i) {
        os << locations_[i].x << ',' << locations_[i].y << ',';
        csv_field(os, radius_[i]) << ',';
        csv_field(os, attractiveness_[i]) << '\n';
    }
}

} // namespace monocity
