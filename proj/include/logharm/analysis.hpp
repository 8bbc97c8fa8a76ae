#pragma once

#include <map>
#include <string>

#include "logharm/grid.hpp"
#include "logharm/mapping.hpp"

namespace logharm {

/// A candidate Schwarz function together with the grid certificate that was
/// actually measured on verified_radius:
///   max_ratio = max |psi(z)/z|   (the classical pointwise Schwarz bound),
///   max_abs   = max |psi(z)|     (range inside the closed unit disc).
/// The certificate demands psi(0) == 0 and max_abs <= 1: that range condition
/// is exactly what the representation formula consumes on a sub-disc, where
/// the maximum principle no longer upgrades it to |psi(z)| <= |z| for free.
/// ratio_bound_holds records whether the pointwise bound held as well.
struct SchwarzWitness {
    TaylorSeries psi;
    double verified_radius;
    double max_ratio;
    double max_abs;
    bool ratio_bound_holds;
};

enum class TheoremId {
    starlike,
    subordination,
    sense_preserving,
    dilatation_bound,
    h_over_g,
    jacobian_bounds,
    dilatation_disc,
};

std::string theorem_name(TheoremId id);

/// Margins are oriented so positive means the inequality holds; a check
/// passes when worst_margin > -kMarginTolerance (strict claims are open-disc
/// statements certified on a grid, so an fp-noise band is allowed and the
/// signed margin is always reported).
constexpr double kMarginTolerance = 1e-9;

struct VerificationReport {
    TheoremId theorem_id;
    bool passed = false;
    double worst_margin = 0.0;
    Complex witness_point{0.0, 0.0};
    SampleGrid grid;
    int truncation_order = 0;
    /// Per-theorem scalars (thresholds, truncated sums, alpha, ...).
    std::map<std::string, double> metrics;
    /// Free-form qualifier, e.g. "heuristic (truncated)" vs "conclusive".
    std::string note;
};

/// Grid certificate for a Schwarz candidate on |z| <= radius. Throws
/// NotSchwarz when psi(0) != 0 or the range escapes the closed unit disc.
SchwarzWitness schwarz_check(const TaylorSeries& psi, double radius, const SampleGrid& grid);

/// Representation-formula constructor:
///   h = g * exp( integral of 2(1-alpha) (psi(t)/t) / (1-psi(t)) dt )
/// with psi/t the coefficient left shift. The result is annotated with alpha
/// and restricted to the witness radius.
LogHarmonicMap construct_starlike(const TaylorSeries& g, const SchwarzWitness& psi,
                                  double alpha, Complex beta);

/// Order-alpha starlikeness margin: min over the grid of
/// (1 + Re{z h'/h - z g'/g}) - alpha.
VerificationReport verify_starlike(const LogHarmonicMap& m, double alpha,
                                   const SampleGrid& grid);

/// The subordination form of the same criterion: half-plane inclusion
/// Re{z h'/h - z g'/g} > alpha - 1 (the target 2(1-alpha)z/(1-z) maps the
/// disc onto that half-plane and fixes 0). Margins coincide with
/// verify_starlike by construction.
VerificationReport subordination_margin(const LogHarmonicMap& m, double alpha,
                                        const SampleGrid& grid);

/// Truncated coefficient sums of z h'/h and z g'/g against 1-|beta| and
/// 1-2|beta|. A truncated PASS is heuristic; a truncated FAIL is conclusive
/// (partial sums of nonnegative terms only grow).
VerificationReport sense_preserving_check(const LogHarmonicMap& m, int n_trunc);

/// worst_margin = 1 - max over the grid of |w(z)|.
VerificationReport dilatation_bound_check(const LogHarmonicMap& m, const SampleGrid& grid);

/// Re{h/g} > 1/(3-2 alpha); requires alpha in (1/2, 1).
VerificationReport h_over_g_bound_check(const LogHarmonicMap& m, double alpha,
                                        const SampleGrid& grid);

/// Two-sided Jacobian estimate with gamma = conj(beta)/(1+beta):
///   lower = (1-|gamma|^2)(1-|z|^2)/(1+|gamma||z|)^2 |f_z|^2,
///   upper = analogous with (1-|gamma||z|)^2 when |z| < |gamma|, else |f_z|^2;
/// margin at a point = min(J - lower, upper - J).
VerificationReport jacobian_bounds_check(const LogHarmonicMap& m, const SampleGrid& grid);

/// w(z) lies in the disc with center gamma(1-|z|^2)/(1-|gamma|^2|z|^2) and
/// radius (1-|gamma|^2)|z|/(1-|gamma|^2|z|^2).
VerificationReport dilatation_disc_check(const LogHarmonicMap& m, const SampleGrid& grid);

}  // namespace logharm
