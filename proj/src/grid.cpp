#include "logharm/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace logharm {

SampleGrid SampleGrid::defaults() {
    return up_to(0.95);
}

SampleGrid SampleGrid::up_to(double r_max, double step, int angles) {
    if (!(step > 0.0) || !(r_max > 0.0)) {
        throw std::invalid_argument("SampleGrid::up_to: positive step and radius required");
    }
    SampleGrid grid;
    grid.angles_per_ring = angles;
    for (int k = 1; k * step <= r_max + 1e-12; ++k) {
        grid.radii.push_back(k * step);
    }
    grid.validate();
    return grid;
}

std::size_t SampleGrid::point_count() const {
    return radii.size() * static_cast<std::size_t>(angles_per_ring) +
           (includes_origin ? 1u : 0u);
}

Complex SampleGrid::point(std::size_t flat) const {
    if (includes_origin) {
        if (flat == 0) return {0.0, 0.0};
        --flat;
    }
    const std::size_t ring = flat / static_cast<std::size_t>(angles_per_ring);
    const std::size_t j = flat % static_cast<std::size_t>(angles_per_ring);
    const double r = radii.at(ring);
    const double theta =
        2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angles_per_ring);
    return {r * std::cos(theta), r * std::sin(theta)};
}

double SampleGrid::max_radius() const {
    return radii.empty() ? 0.0 : radii.back();
}

void SampleGrid::validate() const {
    if (angles_per_ring < 1) {
        throw std::invalid_argument("SampleGrid: angles_per_ring must be >= 1");
    }
    double prev = 0.0;
    for (double r : radii) {
        if (!(r > prev) || !(r < 1.0)) {
            throw std::invalid_argument("SampleGrid: radii must be strictly increasing in (0, 1)");
        }
        prev = r;
    }
}

}  // namespace logharm
