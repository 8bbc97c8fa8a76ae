#pragma once

#include <cstddef>
#include <vector>

#include "logharm/series.hpp"

namespace logharm {

/// Radial-angular evaluation lattice inside a disc of radius < 1. Point k is
/// z = r_i e^{2 pi i j / angles_per_ring} with i = k / angles, j = k % angles
/// (the origin, when included, takes flat index 0 and shifts the rest).
struct SampleGrid {
    std::vector<double> radii;
    int angles_per_ring = 720;
    bool includes_origin = false;

    /// radii {0.05, 0.10, ..., 0.95} x 720 angles.
    static SampleGrid defaults();
    /// radii {step, 2 step, ...} up to r_max inclusive (within fp slack).
    static SampleGrid up_to(double r_max, double step = 0.05, int angles = 720);

    std::size_t point_count() const;
    Complex point(std::size_t flat) const;
    double max_radius() const;

    /// Checks radii strictly increasing in (0, 1) and angles_per_ring >= 1.
    void validate() const;
};

}  // namespace logharm
