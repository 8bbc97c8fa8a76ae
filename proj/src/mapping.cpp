#include "logharm/mapping.hpp"

#include <cmath>
#include <sstream>

namespace logharm {

namespace {

TaylorSeries checked_log_derivative(const TaylorSeries& s, const char* which) {
    if (s.coeff(0) == Complex{0.0, 0.0}) {
        throw InvalidMap(std::string("LogHarmonicMap: ") + which + "(0) must be nonzero");
    }
    return log_derivative(s);
}

}  // namespace

LogHarmonicMap::LogHarmonicMap(Complex beta, TaylorSeries h, TaylorSeries g,
                               std::optional<double> alpha)
    : beta_(beta),
      h_(std::move(h)),
      g_(std::move(g)),
      h_logd_(checked_log_derivative(h_, "h")),
      g_logd_(checked_log_derivative(g_, "g")),
      alpha_(alpha) {
    if (!(beta_.real() > -0.5)) {
        throw InvalidMap("LogHarmonicMap: Re(beta) must exceed -1/2");
    }
    if (g_.coeff(0) != Complex{1.0, 0.0}) {
        throw InvalidMap("LogHarmonicMap: g(0) must equal 1 exactly");
    }
    if (alpha_ && !(*alpha_ >= 0.0 && *alpha_ < 1.0)) {
        throw InvalidMap("LogHarmonicMap: alpha annotation must lie in [0, 1)");
    }
    hg_normalized_ = (h_.coeff(0) == Complex{1.0, 0.0});
}

double LogHarmonicMap::ref_radius() const {
    return std::min(h_.ref_radius(), g_.ref_radius());
}

Complex LogHarmonicMap::gamma() const {
    return std::conj(beta_) / (Complex{1.0, 0.0} + beta_);
}

Complex LogHarmonicMap::eval(Complex z) const {
    if (z == Complex{0.0, 0.0}) return {0.0, 0.0};
    const Complex radial = std::exp(2.0 * beta_ * std::log(std::abs(z)));
    return z * radial * h_.eval(z) * std::conj(g_.eval(z));
}

Complex LogHarmonicMap::zlogderiv_h(Complex z) const {
    if (std::abs(h_.eval(z)) <= kZeroTolerance) {
        throw SingularityDetected("h vanishes within tolerance at evaluation point");
    }
    return h_logd_.eval(z);
}

Complex LogHarmonicMap::zlogderiv_g(Complex z) const {
    if (std::abs(g_.eval(z)) <= kZeroTolerance) {
        throw SingularityDetected("g vanishes within tolerance at evaluation point");
    }
    return g_logd_.eval(z);
}

Complex LogHarmonicMap::starlike_functional(Complex z) const {
    if (z == Complex{0.0, 0.0}) return {1.0, 0.0};
    return Complex{1.0, 0.0} + zlogderiv_h(z) - std::conj(zlogderiv_g(z));
}

WirtingerPair LogHarmonicMap::wirtinger(Complex z) const {
    if (z == Complex{0.0, 0.0}) {
        throw OriginSingularity("wirtinger: derivatives of z|z|^{2beta} are singular at 0");
    }
    const Complex f = eval(z);
    if (std::abs(f) <= kZeroTolerance * std::abs(z)) {
        throw SingularityDetected("wirtinger: f vanishes within tolerance off the origin");
    }
    const Complex f_z = f * (Complex{1.0, 0.0} + beta_ + zlogderiv_h(z)) / z;
    const Complex f_zbar = f * (beta_ + std::conj(zlogderiv_g(z))) / std::conj(z);
    return {f_z, f_zbar};
}

DilatationValue LogHarmonicMap::dilatation(Complex z) const {
    const Complex num = std::conj(beta_) + (z == Complex{0.0, 0.0} ? Complex{0.0, 0.0}
                                                                   : zlogderiv_g(z));
    const Complex den = Complex{1.0, 0.0} + beta_ +
                        (z == Complex{0.0, 0.0} ? Complex{0.0, 0.0} : zlogderiv_h(z));
    if (std::abs(den) <= TaylorSeries::kDivisionFloor) {
        throw DegenerateDenominator("dilatation: 1 + beta + z h'/h degenerated");
    }
    return {num / den};
}

double LogHarmonicMap::pde_residual(Complex z) const {
    if (z == Complex{0.0, 0.0}) {
        throw OriginSingularity("pde_residual: undefined at 0");
    }
    const Complex f = eval(z);
    if (std::abs(f) <= kZeroTolerance * std::abs(z)) {
        throw SingularityDetected("pde_residual: f vanishes within tolerance off the origin");
    }
    const WirtingerPair d = wirtinger(z);
    const Complex w = dilatation(z).w;
    return std::abs(std::conj(d.f_zbar) / std::conj(f) - w * d.f_z / f);
}

double LogHarmonicMap::jacobian(Complex z) const {
    if (z == Complex{0.0, 0.0}) {
        throw OriginSingularity("jacobian: undefined at 0");
    }
    const WirtingerPair d = wirtinger(z);
    const double mod_w = std::abs(dilatation(z).w);
    return std::norm(d.f_z) * (1.0 - mod_w * mod_w);
}

}  // namespace logharm
