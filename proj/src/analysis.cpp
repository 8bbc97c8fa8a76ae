#include "logharm/analysis.hpp"

#include <cmath>
#include <sstream>

#include "logharm/parallel.hpp"

namespace logharm {

namespace {

// Shared shape of every grid certifier: minimize a pointwise margin over the
// grid, keep the witness point, honor the pass tolerance.
template <class PointMargin>
VerificationReport sweep_report(TheoremId id, const LogHarmonicMap& m, const SampleGrid& grid,
                                PointMargin&& margin_at) {
    grid.validate();
    if (grid.max_radius() > m.ref_radius() + 1e-12) {
        std::ostringstream msg;
        msg << theorem_name(id) << ": grid radius " << grid.max_radius()
            << " exceeds map ref_radius " << m.ref_radius();
        throw PointOutsideRadius(msg.str());
    }
    const auto best = par::sweep_min(grid.point_count(), [&](std::size_t i) {
        return margin_at(grid.point(i));
    });
    VerificationReport report;
    report.theorem_id = id;
    report.worst_margin = best.value;
    report.witness_point = grid.point(best.index);
    report.grid = grid;
    report.truncation_order = std::min(m.h().order(), m.g().order());
    report.passed = best.value > -kMarginTolerance;
    return report;
}

double starlike_margin_at(const LogHarmonicMap& m, double alpha, Complex z) {
    // Re{conj(z g'/g)} = Re{z g'/g}, so the functional's real part is the
    // Lemma quantity 1 + Re{z h'/h - z g'/g}.
    return m.starlike_functional(z).real() - alpha;
}

void require_alpha_range(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie in [0, 1)");
    }
}

}  // namespace

std::string theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::starlike: return "starlike";
        case TheoremId::subordination: return "subordination";
        case TheoremId::sense_preserving: return "sense_preserving";
        case TheoremId::dilatation_bound: return "dilatation_bound";
        case TheoremId::h_over_g: return "h_over_g";
        case TheoremId::jacobian_bounds: return "jacobian_bounds";
        case TheoremId::dilatation_disc: return "dilatation_disc";
    }
    return "unknown";
}

SchwarzWitness schwarz_check(const TaylorSeries& psi, double radius, const SampleGrid& grid) {
    grid.validate();
    if (radius > psi.ref_radius() + 1e-12) {
        throw PointOutsideRadius("schwarz_check: radius exceeds psi.ref_radius");
    }
    if (psi.coeff(0) != Complex{0.0, 0.0}) {
        throw NotSchwarz("schwarz_check: psi(0) != 0");
    }

    // Only grid points with |z| <= radius participate in the certificate.
    std::size_t rings = 0;
    while (rings < grid.radii.size() && grid.radii[rings] <= radius + 1e-12) ++rings;
    const std::size_t count = rings * static_cast<std::size_t>(grid.angles_per_ring);
    if (count == 0) {
        throw std::invalid_argument("schwarz_check: no grid points inside the radius");
    }

    SampleGrid clipped = grid;
    clipped.radii.resize(rings);
    clipped.includes_origin = false;

    struct AbsRatio {
        double abs_val;
        double ratio;
    };
    std::vector<AbsRatio> vals(count);
    par::fill_parallel(vals, [&](std::size_t i) {
        const Complex z = clipped.point(i);
        const double a = std::abs(psi.eval(z));
        return AbsRatio{a, a / std::abs(z)};
    });
    double max_ratio = 0.0, max_abs = 0.0;
    for (const AbsRatio& v : vals) {
        max_ratio = std::max(max_ratio, v.ratio);
        max_abs = std::max(max_abs, v.abs_val);
    }

    SchwarzWitness witness{psi, radius, max_ratio, max_abs, max_ratio <= 1.0 + 1e-12};
    if (witness.max_abs > 1.0 + 1e-12) {
        std::ostringstream msg;
        msg << "schwarz_check: max |psi(z)| = " << witness.max_abs << " on radius " << radius
            << " escapes the closed unit disc (max |psi(z)/z| = " << max_ratio << ")";
        throw NotSchwarz(msg.str());
    }
    return witness;
}

LogHarmonicMap construct_starlike(const TaylorSeries& g, const SchwarzWitness& psi,
                                  double alpha, Complex beta) {
    require_alpha_range(alpha);
    if (g.coeff(0) != Complex{1.0, 0.0}) {
        throw InvalidMap("construct_starlike: g(0) must equal 1");
    }

    const TaylorSeries one = TaylorSeries::one(psi.psi.order(), psi.psi.ref_radius());
    const TaylorSeries one_minus_psi = one - psi.psi;

    // 1 - psi must stay away from 0 on the witness disc.
    const SampleGrid check = SampleGrid::up_to(psi.verified_radius, 0.05, 360);
    par::sweep_min(check.point_count(), [&](std::size_t i) {
        const double v = std::abs(one_minus_psi.eval(check.point(i)));
        if (v < 1e-10) {
            throw DegenerateDenominator("construct_starlike: 1 - psi vanishes on the grid");
        }
        return v;
    });

    // 2(1-alpha) * (psi/t) / (1 - psi), integrated from 0, then exponentiated.
    const TaylorSeries integrand =
        scale(div(shift_down(psi.psi), one_minus_psi), Complex{2.0 * (1.0 - alpha), 0.0});
    const TaylorSeries ratio = exp_series(integrand.antiderivative());
    const TaylorSeries h = mul(g, ratio);

    return LogHarmonicMap(beta, h.with_ref_radius(psi.verified_radius),
                          g.truncated(h.order()).with_ref_radius(psi.verified_radius), alpha);
}

VerificationReport verify_starlike(const LogHarmonicMap& m, double alpha,
                                   const SampleGrid& grid) {
    require_alpha_range(alpha);
    auto report = sweep_report(TheoremId::starlike, m, grid, [&](Complex z) {
        return starlike_margin_at(m, alpha, z);
    });
    report.metrics["alpha"] = alpha;
    return report;
}

VerificationReport subordination_margin(const LogHarmonicMap& m, double alpha,
                                        const SampleGrid& grid) {
    require_alpha_range(alpha);
    // Identical margin: Re{z h'/h - z g'/g} - (alpha - 1) == functional Re - alpha.
    auto report = sweep_report(TheoremId::subordination, m, grid, [&](Complex z) {
        return starlike_margin_at(m, alpha, z);
    });
    report.metrics["alpha"] = alpha;
    report.metrics["half_plane_bound"] = alpha - 1.0;
    // Base-point match of the subordination: both sides vanish at 0.
    report.metrics["value_at_origin"] = std::abs(m.starlike_functional({0.0, 0.0}) - 1.0);
    return report;
}

VerificationReport sense_preserving_check(const LogHarmonicMap& m, int n_trunc) {
    const int max_order = std::min(m.h().order(), m.g().order());
    if (n_trunc < 1 || n_trunc > max_order) {
        throw std::invalid_argument("sense_preserving_check: n_trunc outside [1, order]");
    }
    const TaylorSeries hn = log_derivative(m.h());
    const TaylorSeries gn = log_derivative(m.g());

    double sum_h = 0.0, sum_g = 0.0;
    for (int n = 1; n <= n_trunc; ++n) {
        sum_h += std::abs(hn.coeff(n));
        sum_g += std::abs(gn.coeff(n));
    }
    const double mod_beta = std::abs(m.beta());
    const double margin_h = (1.0 - mod_beta) - sum_h;          // strict < in the theorem
    const double margin_hg = (1.0 - 2.0 * mod_beta) - (sum_h + sum_g);  // <= in the theorem

    VerificationReport report;
    report.theorem_id = TheoremId::sense_preserving;
    report.worst_margin = std::min(margin_h, margin_hg);
    report.witness_point = {0.0, 0.0};
    report.truncation_order = n_trunc;
    report.passed = report.worst_margin > -kMarginTolerance;
    report.metrics["sum_abs_hn"] = sum_h;
    report.metrics["sum_abs_hn_plus_gn"] = sum_h + sum_g;
    report.metrics["bound_hn"] = 1.0 - mod_beta;
    report.metrics["bound_hn_plus_gn"] = 1.0 - 2.0 * mod_beta;
    report.metrics["margin_hn"] = margin_h;
    report.metrics["margin_hn_plus_gn"] = margin_hg;
    // Partial sums of |h_n|, |g_n| only grow with the truncation order.
    report.note = report.passed ? "heuristic (truncated)" : "conclusive";
    return report;
}

VerificationReport dilatation_bound_check(const LogHarmonicMap& m, const SampleGrid& grid) {
    auto report = sweep_report(TheoremId::dilatation_bound, m, grid, [&](Complex z) {
        return 1.0 - std::abs(m.dilatation(z).w);
    });
    // The proof's truncated series bound, recorded when its denominator is usable.
    const TaylorSeries hn = log_derivative(m.h());
    const TaylorSeries gn = log_derivative(m.g());
    double sum_h = 0.0, sum_g = 0.0;
    for (int n = 1; n <= hn.order(); ++n) sum_h += std::abs(hn.coeff(n));
    for (int n = 1; n <= gn.order(); ++n) sum_g += std::abs(gn.coeff(n));
    const double den = 1.0 - std::abs(m.beta()) - sum_h;
    if (den > 0.0) {
        report.metrics["series_bound"] = (std::abs(m.beta()) + sum_g) / den;
    }
    return report;
}

VerificationReport h_over_g_bound_check(const LogHarmonicMap& m, double alpha,
                                        const SampleGrid& grid) {
    if (!(alpha > 0.5 && alpha < 1.0)) {
        throw AlphaOutOfRange("h_over_g_bound_check: theorem requires alpha in (1/2, 1)");
    }
    const double mu = 1.0 / (3.0 - 2.0 * alpha);
    auto report = sweep_report(TheoremId::h_over_g, m, grid, [&](Complex z) {
        const Complex gv = m.g().eval(z);
        if (std::abs(gv) <= LogHarmonicMap::kZeroTolerance) {
            throw SingularityDetected("h_over_g: g vanishes within tolerance");
        }
        return (m.h().eval(z) / gv).real() - mu;
    });
    report.metrics["alpha"] = alpha;
    report.metrics["mu"] = mu;
    return report;
}

VerificationReport jacobian_bounds_check(const LogHarmonicMap& m, const SampleGrid& grid) {
    if (grid.includes_origin) {
        throw OriginSingularity("jacobian_bounds_check: grid must exclude the origin");
    }
    const double mod_gamma = std::abs(m.gamma());
    auto report = sweep_report(TheoremId::jacobian_bounds, m, grid, [&](Complex z) {
        const double r = std::abs(z);
        const double fz2 = std::norm(m.wirtinger(z).f_z);
        const double jac = m.jacobian(z);
        const double common = (1.0 - mod_gamma * mod_gamma) * (1.0 - r * r);
        const double lower = common / ((1.0 + mod_gamma * r) * (1.0 + mod_gamma * r)) * fz2;
        const double upper = (r < mod_gamma)
            ? common / ((1.0 - mod_gamma * r) * (1.0 - mod_gamma * r)) * fz2
            : fz2;
        return std::min(jac - lower, upper - jac);
    });
    report.metrics["mod_gamma"] = mod_gamma;
    return report;
}

VerificationReport dilatation_disc_check(const LogHarmonicMap& m, const SampleGrid& grid) {
    if (grid.includes_origin) {
        throw OriginSingularity("dilatation_disc_check: grid must exclude the origin");
    }
    const Complex gamma = m.gamma();
    const double mod_gamma2 = std::norm(gamma);
    auto report = sweep_report(TheoremId::dilatation_disc, m, grid, [&](Complex z) {
        const double r2 = std::norm(z);
        const double den = 1.0 - mod_gamma2 * r2;
        const Complex center = gamma * (1.0 - r2) / den;
        const double radius = (1.0 - mod_gamma2) * std::sqrt(r2) / den;
        return radius - std::abs(m.dilatation(z).w - center);
    });
    report.metrics["mod_gamma"] = std::abs(gamma);
    return report;
}

}  // namespace logharm
