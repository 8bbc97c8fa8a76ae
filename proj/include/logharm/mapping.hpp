#pragma once

#include <optional>

#include "logharm/series.hpp"

namespace logharm {

/// Wirtinger derivative pair. The real partials are recovered as
/// f_x = f_z + f_zbar and f_y = i (f_z - f_zbar).
struct WirtingerPair {
    Complex f_z;
    Complex f_zbar;
};

/// The second complex dilatation w at a point; |w| < 1 where the map is
/// sense-preserving.
struct DilatationValue {
    Complex w;
};

/// f(z) = z |z|^{2 beta} h(z) conj(g(z)) with Re(beta) > -1/2, g(0) = 1 and
/// h(0) != 0. The optional alpha records an intended starlikeness order; it
/// is an annotation, enforcement lives in the analysis module.
///
/// |z|^{2 beta} is computed as exp(2 beta ln|z|): single-valued, since the
/// real logarithm of a positive number needs no branch choice. Its modulus
/// is |z|^{2 Re beta} and its argument 2 Im(beta) ln|z| (the spiral twist).
class LogHarmonicMap {
public:
    /// Threshold below which h(z) or g(z) counts as a zero of the factor.
    static constexpr double kZeroTolerance = 1e-10;

    LogHarmonicMap(Complex beta, TaylorSeries h, TaylorSeries g,
                   std::optional<double> alpha = std::nullopt);

    Complex beta() const { return beta_; }
    const TaylorSeries& h() const { return h_; }
    const TaylorSeries& g() const { return g_; }
    std::optional<double> alpha() const { return alpha_; }
    /// True when h(0) == 1 as well (the stricter class normalization).
    bool hg_normalized() const { return hg_normalized_; }
    /// min of the factors' trusted radii.
    double ref_radius() const;

    /// gamma = conj(beta)/(1+beta), the dilatation at the origin.
    Complex gamma() const;

    /// f(z); f(0) = 0 by definition.
    Complex eval(Complex z) const;

    /// 1 + z h'/h - conj(z g'/g), which equals (z f_z - zbar f_zbar)/f.
    /// Its analytic expression extends to z = 0 with value 1.
    Complex starlike_functional(Complex z) const;

    /// The pair with z f_z/f = 1 + beta + z h'/h and
    /// zbar f_zbar/f = beta + conj(z g'/g). Refuses z = 0.
    WirtingerPair wirtinger(Complex z) const;

    /// w(z) = (conj(beta) + z g'/g) / (1 + beta + z h'/h), evaluated as the
    /// analytic expression; defined at 0 with w(0) = gamma.
    DilatationValue dilatation(Complex z) const;

    /// | conj(f_zbar)/conj(f) - w(z) f_z/f |; near machine zero for any
    /// well-formed map.
    double pde_residual(Complex z) const;

    /// J_f(z) = |f_z|^2 (1 - |w(z)|^2).
    double jacobian(Complex z) const;

private:
    // z h'(z)/h(z) evaluated through the cached log-derivative series (the
    // coefficients h_n of the coefficient theorems). Differentiating the
    // truncated polynomial instead would amplify the truncation error by a
    // factor ~N^2 r^N near the rim for growing-coefficient factors like the
    // Koebe one; the log-derivative series of those factors has bounded
    // coefficients and stays faithful to the intended analytic map.
    // Throws SingularityDetected when |h(z)| <= kZeroTolerance; same for g.
    Complex zlogderiv_h(Complex z) const;
    Complex zlogderiv_g(Complex z) const;

    Complex beta_;
    TaylorSeries h_;
    TaylorSeries g_;
    TaylorSeries h_logd_;
    TaylorSeries g_logd_;
    std::optional<double> alpha_;
    bool hg_normalized_;
};

}  // namespace logharm
