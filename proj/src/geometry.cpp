#include "logharm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "logharm/parallel.hpp"

namespace logharm {

namespace {

std::string fmt15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string export_csv(const BoundaryCurve& curve) {
    std::string out = "theta,re,im\n";
    const std::size_t n = curve.points.size();
    for (std::size_t j = 0; j < n; ++j) {
        const double theta =
            2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
        out += fmt15(theta);
        out += ',';
        out += fmt15(curve.points[j].real());
        out += ',';
        out += fmt15(curve.points[j].imag());
        out += '\n';
    }
    return out;
}

std::string export_svg(const BoundaryCurve& curve) {
    // Image y grows downward in SVG, so plot (re, -im).
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const Complex& p : curve.points) {
        xmin = std::min(xmin, p.real());
        xmax = std::max(xmax, p.real());
        ymin = std::min(ymin, -p.imag());
        ymax = std::max(ymax, -p.imag());
    }
    const double w = xmax - xmin, h = ymax - ymin;
    const double scale = std::max({w, h, 1e-9});
    const double pad_x = 0.05 * (w > 0.0 ? w : scale);
    const double pad_y = 0.05 * (h > 0.0 ? h : scale);

    std::string d;
    for (std::size_t j = 0; j < curve.points.size(); ++j) {
        d += (j == 0) ? "M " : "L ";
        d += fmt9(curve.points[j].real());
        d += ' ';
        d += fmt9(-curve.points[j].imag());
        d += ' ';
    }
    d += 'Z';

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    out += fmt9(xmin - pad_x);
    out += ' ';
    out += fmt9(ymin - pad_y);
    out += ' ';
    out += fmt9(w + 2.0 * pad_x);
    out += ' ';
    out += fmt9(h + 2.0 * pad_y);
    out += "\">\n  <path d=\"";
    out += d;
    out += "\" fill=\"none\" stroke=\"black\" stroke-width=\"";
    out += fmt9(0.004 * scale);
    out += "\"/>\n</svg>\n";
    return out;
}

// --- collision machinery -------------------------------------------------

constexpr double kCollisionTolFactor = 1e-6;
constexpr int kMaxRefinements = 128;
constexpr int kMaxGaussNewtonIters = 100;

struct Candidate {
    std::uint32_t a;  // earlier flat index
    std::uint32_t b;
    double distance;
    double score;  // distance relative to local image spacing
};

std::uint64_t cell_key(double x, double y, double cell) {
    const auto ix = static_cast<std::int64_t>(std::floor(x / cell));
    const auto iy = static_cast<std::int64_t>(std::floor(y / cell));
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(ix)) << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(iy));
}

// Damped Gauss-Newton polish of a near-collision pair: minimal-norm steps of
// the underdetermined system f(z1) - f(z2) = 0 using the Wirtinger Jacobian,
// both points projected into the probe disc. Returns the pair when the image
// distance lands under tol with the required domain separation.
std::optional<CollisionPair> refine_pair(const LogHarmonicMap& m, Complex z1, Complex z2,
                                         double r, double resolution, double tol) {
    const auto project = [&](Complex z) {
        const double a = std::abs(z);
        return a > r ? z * (r / a) : z;
    };
    try {
        double dist = std::abs(m.eval(z1) - m.eval(z2));
        for (int iter = 0; iter < kMaxGaussNewtonIters && dist >= 0.25 * tol; ++iter) {
            const Complex F = m.eval(z1) - m.eval(z2);
            const WirtingerPair w1 = m.wirtinger(z1);
            const WirtingerPair w2 = m.wirtinger(z2);
            const Complex cols[4] = {
                w1.f_z + w1.f_zbar,
                Complex{0.0, 1.0} * (w1.f_z - w1.f_zbar),
                -(w2.f_z + w2.f_zbar),
                -(Complex{0.0, 1.0} * (w2.f_z - w2.f_zbar)),
            };
            double m11 = 0.0, m12 = 0.0, m22 = 0.0;
            for (const Complex& c : cols) {
                m11 += c.real() * c.real();
                m12 += c.real() * c.imag();
                m22 += c.imag() * c.imag();
            }
            const double damp = 1e-12 * (m11 + m22) + 1e-300;
            m11 += damp;
            m22 += damp;
            const double det = m11 * m22 - m12 * m12;
            if (!(det > 0.0) || !std::isfinite(det)) return std::nullopt;
            const double y1 = (-F.real() * m22 + F.imag() * m12) / det;
            const double y2 = (-F.imag() * m11 + F.real() * m12) / det;
            double d[4];
            for (int c = 0; c < 4; ++c) d[c] = cols[c].real() * y1 + cols[c].imag() * y2;

            double norm = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2] + d[3] * d[3]);
            const double cap = 2.0 * resolution;
            double step = norm > cap ? cap / norm : 1.0;

            bool improved = false;
            for (int half = 0; half < 5; ++half) {
                const Complex n1 = project(z1 + step * Complex{d[0], d[1]});
                const Complex n2 = project(z2 + step * Complex{d[2], d[3]});
                if (std::abs(n1) < 0.5 * resolution || std::abs(n2) < 0.5 * resolution) {
                    return std::nullopt;  // wandered into the excluded inner disc
                }
                const double nd = std::abs(m.eval(n1) - m.eval(n2));
                if (nd < dist) {
                    z1 = n1;
                    z2 = n2;
                    dist = nd;
                    improved = true;
                    break;
                }
                step *= 0.5;
            }
            if (!improved) break;  // stalled at a (constrained) local minimum
        }
        if (dist < tol && std::abs(z1 - z2) > 10.0 * resolution && std::abs(z1) <= r + 1e-12 &&
            std::abs(z2) <= r + 1e-12) {
            return CollisionPair{z1, z2, dist};
        }
    } catch (const Error&) {
        // singular point hit during the polish: candidate rejected
    }
    return std::nullopt;
}

}  // namespace

BoundaryCurve sample_boundary(const LogHarmonicMap& m, double r, int n_points) {
    if (n_points < 16) {
        throw std::invalid_argument("sample_boundary: need at least 16 points");
    }
    if (!(r > 0.0) || r > m.ref_radius() + 1e-12) {
        throw PointOutsideRadius("sample_boundary: radius outside (0, ref_radius]");
    }
    BoundaryCurve curve;
    curve.radius = r;
    curve.points.resize(static_cast<std::size_t>(n_points));
    par::fill_parallel(curve.points, [&](std::size_t j) {
        const double theta =
            2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_points);
        return m.eval({r * std::cos(theta), r * std::sin(theta)});
    });
    return curve;
}

std::string export_curve(const BoundaryCurve& curve, CurveFormat format) {
    return format == CurveFormat::csv ? export_csv(curve) : export_svg(curve);
}

BoundaryCurve parse_curve_csv(const std::string& csv) {
    BoundaryCurve curve;
    std::istringstream in(csv);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (header) {
            if (line != "theta,re,im") {
                throw std::invalid_argument("parse_curve_csv: bad header");
            }
            header = false;
            continue;
        }
        if (line.empty()) continue;
        const char* p = line.c_str();
        char* end = nullptr;
        std::strtod(p, &end);  // theta column, implied by row order
        if (end == p || *end != ',') throw std::invalid_argument("parse_curve_csv: bad row");
        p = end + 1;
        const double re = std::strtod(p, &end);
        if (end == p || *end != ',') throw std::invalid_argument("parse_curve_csv: bad row");
        p = end + 1;
        const double im = std::strtod(p, &end);
        if (end == p) throw std::invalid_argument("parse_curve_csv: bad row");
        curve.points.emplace_back(re, im);
    }
    return curve;
}

std::optional<CollisionPair> find_collision(const LogHarmonicMap& m, double r,
                                            double resolution, int samples_per_ring) {
    const int rings = static_cast<int>(std::floor(r / resolution + 1e-9));
    if (rings < 1 || 2.0 * r <= 10.0 * resolution) return std::nullopt;

    const int n = samples_per_ring;
    const std::size_t total = static_cast<std::size_t>(rings) * static_cast<std::size_t>(n);

    std::vector<Complex> domain(total);
    par::fill_parallel(domain, [&](std::size_t p) {
        const int k = static_cast<int>(p) / n;
        const int j = static_cast<int>(p) % n;
        const double rho = (k + 1) * resolution;
        const double theta = 2.0 * std::numbers::pi * j / n;
        return Complex{rho * std::cos(theta), rho * std::sin(theta)};
    });
    std::vector<Complex> image(total);
    par::fill_parallel(image, [&](std::size_t p) { return m.eval(domain[p]); });

    // Per-ring image scale (median |f|) and per-point spacing to the next
    // sample on the same ring.
    std::vector<double> ring_tol(static_cast<std::size_t>(rings));
    std::vector<double> spacing(total);
    std::vector<double> mods(static_cast<std::size_t>(n));
    for (int k = 0; k < rings; ++k) {
        const std::size_t base = static_cast<std::size_t>(k) * n;
        for (int j = 0; j < n; ++j) mods[static_cast<std::size_t>(j)] = std::abs(image[base + j]);
        std::nth_element(mods.begin(), mods.begin() + n / 2, mods.end());
        ring_tol[static_cast<std::size_t>(k)] = kCollisionTolFactor * mods[static_cast<std::size_t>(n / 2)];
        for (int j = 0; j < n; ++j) {
            spacing[base + j] = std::abs(image[base + (j + 1) % n] - image[base + j]);
        }
    }

    double cell = 0.0;
    for (std::size_t p = 0; p < total; ++p) {
        cell = std::max(cell, std::max(4.0 * spacing[p], ring_tol[p / n]));
    }
    if (!(cell > 0.0)) cell = 1e-12;

    const double min_sep2 = 100.0 * resolution * resolution;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> hash;
    hash.reserve(total);
    std::vector<Candidate> candidates;
    std::optional<CollisionPair> direct;

    // squared distances throughout the scan; sqrt only for accepted pairs
    for (std::uint32_t p = 0; p < total; ++p) {
        const double x = image[p].real(), y = image[p].imag();
        for (int dx = -1; dx <= 1; ++dx) {
            for (int dy = -1; dy <= 1; ++dy) {
                const auto it = hash.find(cell_key(x + dx * cell, y + dy * cell, cell));
                if (it == hash.end()) continue;
                for (const std::uint32_t q : it->second) {
                    const double dist2 = std::norm(image[p] - image[q]);
                    const double local = std::min(spacing[p], spacing[q]);
                    const double tol = std::max(ring_tol[p / n], ring_tol[q / n]);
                    const double gate = std::max(4.0 * local, tol);
                    if (dist2 >= gate * gate) continue;
                    if (std::norm(domain[p] - domain[q]) <= min_sep2) continue;
                    const double dist = std::sqrt(dist2);
                    if (dist < tol) {
                        // exact-duplicate hit straight from the samples
                        const CollisionPair hit{domain[q], domain[p], dist};
                        if (!direct || dist < direct->image_distance) direct = hit;
                        continue;
                    }
                    if (dist < 4.0 * local) {
                        candidates.push_back(
                            {q, p, dist, dist / std::max(local, 1e-300)});
                    }
                }
            }
        }
        hash[cell_key(x, y, cell)].push_back(p);
    }
    if (direct) return direct;

    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.score != b.score) return a.score < b.score;
        if (a.a != b.a) return a.a < b.a;
        return a.b < b.b;
    });
    const int limit = std::min<std::size_t>(candidates.size(), kMaxRefinements);
    for (int i = 0; i < limit; ++i) {
        const Candidate& c = candidates[static_cast<std::size_t>(i)];
        const double tol = std::max(ring_tol[c.a / n], ring_tol[c.b / n]);
        if (auto hit = refine_pair(m, domain[c.a], domain[c.b], r, resolution, tol)) {
            return hit;
        }
    }
    return std::nullopt;
}

InjectivityEstimate injectivity_radius(const LogHarmonicMap& m, double resolution,
                                       int samples_per_ring) {
    if (!(resolution >= 1e-3)) {
        throw std::invalid_argument("injectivity_radius: resolution must be >= 1e-3");
    }
    if (samples_per_ring < 16) {
        throw std::invalid_argument("injectivity_radius: need at least 16 samples per ring");
    }
    const double r_max = std::min(0.95, m.ref_radius());

    InjectivityEstimate est;
    est.resolution = resolution;

    auto top = find_collision(m, r_max, resolution, samples_per_ring);
    if (!top) {
        est.lower = r_max;
        est.upper = r_max + resolution;
        return est;
    }

    // A disc of radius `resolution` cannot hold a pair separated by more than
    // 10*resolution, so it is collision-free at this certificate's scale.
    double lo = resolution;
    double hi = r_max;
    est.collision = top;
    while (hi - lo > 2.0 * resolution) {
        const double mid = 0.5 * (lo + hi);
        if (auto c = find_collision(m, mid, resolution, samples_per_ring)) {
            hi = mid;
            est.collision = c;
        } else {
            lo = mid;
        }
    }
    est.lower = lo;
    est.upper = hi;
    return est;
}

}  // namespace logharm
