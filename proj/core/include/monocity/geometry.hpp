// Monocentric city lattice: locations, Gaussian attractiveness field and
// distance-ring bookkeeping.
#pragma once

#include <iosfwd>
#include <vector>

namespace monocity {

// A(r) = exp(-r^2/R^2), optionally forced to zero beyond the city radius.
// `steepness` controls how concentrated the attractiveness is around the
// center; `city_radius` is chosen so the circular city and the square lattice
// have equal area.
struct AttractivenessSpec {
    double steepness = 3.0;
    double city_radius = 0.0;
    bool cutoff_enabled = false;

    static AttractivenessSpec for_grid(int linear_size, double spacing, double steepness,
                                       bool cutoff_enabled = false);
};

double attractiveness(double r, const AttractivenessSpec& spec);

// Equal-area circle radius for an L x L lattice with the given spacing.
double default_city_radius(int linear_size, double spacing);

struct Location {
    int x = 0;
    int y = 0;
};

// Immutable after construction; safe to share between concurrent runs.
class CityGrid {
  public:
    // L must be odd (unique center) and >= 3; spacing > 0.
    CityGrid(int linear_size, double spacing, AttractivenessSpec spec);

    int linear_size() const { return linear_size_; }
    double spacing() const { return spacing_; }
    int num_locations() const { return linear_size_ * linear_size_; }
    const AttractivenessSpec& spec() const { return spec_; }

    Location location(int index) const { return locations_[index]; }
    int index_of(int x, int y) const;

    // Squared lattice distance x^2 + y^2 (exact integer) and Euclidean
    // distance from the center in physical units.
    int radius2(int index) const { return radius2_[index]; }
    double radius(int index) const { return radius_[index]; }
    double attractiveness_at(int index) const { return attractiveness_[index]; }

    // Rings partition the grid by exact squared distance, sorted ascending.
    int num_rings() const { return static_cast<int>(ring_radius2_.size()); }
    const std::vector<int>& ring_radius2() const { return ring_radius2_; }
    const std::vector<std::vector<int>>& rings() const { return ring_members_; }
    int ring_of(int index) const { return ring_index_[index]; }
    double ring_radius(int ring) const;

    // Columns: x,y,r,A
    void write_csv(std::ostream& os) const;

  private:
    int linear_size_;
    double spacing_;
    AttractivenessSpec spec_;
    std::vector<Location> locations_;
    std::vector<int> radius2_;
    std::vector<double> radius_;
    std::vector<double> attractiveness_;
    std::vector<int> ring_radius2_;
    std::vector<std::vector<int>> ring_members_;
    std::vector<int> ring_index_;
};

} // namespace monocity
