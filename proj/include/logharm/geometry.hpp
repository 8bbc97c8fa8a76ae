#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logharm/mapping.hpp"

namespace logharm {

/// Image of a circle |z| = radius under a map, sampled at uniformly spaced
/// angles starting from theta = 0.
struct BoundaryCurve {
    double radius = 0.0;
    std::vector<Complex> points;
};

enum class CurveFormat { csv, svg };

/// A confirmed collision: two preimages separated in the domain whose images
/// agree within the collision tolerance.
struct CollisionPair {
    Complex z1;
    Complex z2;
    double image_distance = 0.0;
};

/// Bracket around the injectivity radius at a given sampling resolution.
/// lower is the largest tested radius with no collision found, upper the
/// smallest tested radius with one (lower + resolution when none was ever
/// found). The certificate is resolution-bound: collisions are only sought
/// between samples separated by more than 10*resolution in the domain.
struct InjectivityEstimate {
    double lower = 0.0;
    double upper = 0.0;
    double resolution = 0.0;
    std::optional<CollisionPair> collision;
};

/// eval_map at n_points uniformly spaced angles on |z| = r. Requires
/// 0 < r <= ref_radius and n_points >= 16.
BoundaryCurve sample_boundary(const LogHarmonicMap& m, double r, int n_points);

/// CSV: header "theta,re,im", one row per point, 15 significant digits.
/// SVG: one closed path, viewBox fitted to the curve's bounding box with a
/// 5% margin per side. UTF-8, LF line endings, '.' decimal separator.
std::string export_curve(const BoundaryCurve& curve, CurveFormat format);

/// Parses the CSV produced by export_curve back into a curve (radius is not
/// stored in the file and is left 0).
BoundaryCurve parse_curve_csv(const std::string& csv);

/// Bisection bracket for the injectivity radius. Each probe radius r samples
/// concentric rings (spacing = resolution, the inner disc of radius
/// resolution excluded) and looks for sample points z1 != z2 with
/// |z1 - z2| > 10*resolution and |f(z1) - f(z2)| < collision_tol, where
/// collision_tol = 1e-6 * (median |f| over the rings involved). Near-miss
/// pairs found by a spatial hash over the image points are polished by a
/// damped Gauss-Newton on |f(z1)-f(z2)|^2 (points confined to the probe
/// disc) before the tolerance verdict, so collisions are found at sampling
/// densities far below the tolerance scale. Requires resolution >= 1e-3.
InjectivityEstimate injectivity_radius(const LogHarmonicMap& m, double resolution,
                                       int samples_per_ring);

/// Single probe used by injectivity_radius: collision search on the disc of
/// radius r. Exposed for tests and the benchmark.
std::optional<CollisionPair> find_collision(const LogHarmonicMap& m, double r,
                                            double resolution, int samples_per_ring);

}  // namespace logharm
