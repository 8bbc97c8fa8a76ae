#include "logharm/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace logharm {

namespace {

void require_finite(std::span<const Complex> coeffs) {
    for (const Complex& c : coeffs) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw std::invalid_argument("TaylorSeries: non-finite coefficient");
        }
    }
}

int min_order(const TaylorSeries& a, const TaylorSeries& b) {
    return std::min(a.order(), b.order());
}

double min_radius(const TaylorSeries& a, const TaylorSeries& b) {
    return std::min(a.ref_radius(), b.ref_radius());
}

}  // namespace

TaylorSeries::TaylorSeries(std::vector<Complex> coeffs, double ref_radius)
    : coeffs_(std::move(coeffs)), ref_radius_(ref_radius) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("TaylorSeries: empty coefficient list");
    }
    if (!(ref_radius_ > 0.0) || ref_radius_ > 1.0) {
        throw std::invalid_argument("TaylorSeries: ref_radius must lie in (0, 1]");
    }
    require_finite(coeffs_);
}

TaylorSeries TaylorSeries::constant(Complex c, int order, double ref_radius) {
    std::vector<Complex> v(static_cast<std::size_t>(order) + 1, Complex{0.0, 0.0});
    v[0] = c;
    return TaylorSeries(std::move(v), ref_radius);
}

TaylorSeries TaylorSeries::zero(int order, double ref_radius) {
    return constant({0.0, 0.0}, order, ref_radius);
}

TaylorSeries TaylorSeries::one(int order, double ref_radius) {
    return constant({1.0, 0.0}, order, ref_radius);
}

TaylorSeries TaylorSeries::identity(int order, double ref_radius) {
    if (order < 1) throw std::invalid_argument("identity series needs order >= 1");
    std::vector<Complex> v(static_cast<std::size_t>(order) + 1, Complex{0.0, 0.0});
    v[1] = Complex{1.0, 0.0};
    return TaylorSeries(std::move(v), ref_radius);
}

TaylorSeries TaylorSeries::polynomial(std::initializer_list<Complex> coeffs, int order,
                                      double ref_radius) {
    std::vector<Complex> v(coeffs);
    if (static_cast<int>(v.size()) - 1 > order) {
        throw std::invalid_argument("polynomial degree exceeds requested order");
    }
    v.resize(static_cast<std::size_t>(order) + 1, Complex{0.0, 0.0});
    return TaylorSeries(std::move(v), ref_radius);
}

Complex TaylorSeries::coeff(int n) const {
    if (n < 0) throw std::invalid_argument("coefficient index must be nonnegative");
    if (n > order()) return {0.0, 0.0};
    return coeffs_[static_cast<std::size_t>(n)];
}

TaylorSeries TaylorSeries::with_ref_radius(double r) const {
    return TaylorSeries(coeffs_, r);
}

TaylorSeries TaylorSeries::truncated(int order) const {
    if (order < 0) throw std::invalid_argument("truncation order must be nonnegative");
    std::vector<Complex> v(coeffs_);
    v.resize(static_cast<std::size_t>(order) + 1, Complex{0.0, 0.0});
    return TaylorSeries(std::move(v), ref_radius_);
}

Complex TaylorSeries::eval(Complex z) const {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw std::invalid_argument("eval: non-finite point");
    }
    if (std::abs(z) > ref_radius_ + 1e-12) {
        std::ostringstream msg;
        msg << "eval: |z| = " << std::abs(z) << " exceeds ref_radius " << ref_radius_;
        throw PointOutsideRadius(msg.str());
    }
    Complex acc{0.0, 0.0};
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * z + coeffs_[i];
    }
    return acc;
}

TaylorSeries TaylorSeries::derivative() const {
    if (order() == 0) return zero(0, ref_radius_);
    std::vector<Complex> v(coeffs_.size() - 1);
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
        v[n - 1] = static_cast<double>(n) * coeffs_[n];
    }
    return TaylorSeries(std::move(v), ref_radius_);
}

TaylorSeries TaylorSeries::antiderivative() const {
    std::vector<Complex> v(coeffs_.size() + 1, Complex{0.0, 0.0});
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        v[n + 1] = coeffs_[n] / static_cast<double>(n + 1);
    }
    return TaylorSeries(std::move(v), ref_radius_);
}

TaylorSeries add(const TaylorSeries& a, const TaylorSeries& b) {
    const int n = min_order(a, b);
    std::vector<Complex> v(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = a.coeff(i) + b.coeff(i);
    return TaylorSeries(std::move(v), min_radius(a, b));
}

TaylorSeries sub(const TaylorSeries& a, const TaylorSeries& b) {
    const int n = min_order(a, b);
    std::vector<Complex> v(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = a.coeff(i) - b.coeff(i);
    return TaylorSeries(std::move(v), min_radius(a, b));
}

TaylorSeries mul(const TaylorSeries& a, const TaylorSeries& b) {
    const int n = min_order(a, b);
    std::vector<Complex> v(static_cast<std::size_t>(n) + 1, Complex{0.0, 0.0});
    for (int i = 0; i <= n; ++i) {
        Complex acc{0.0, 0.0};
        for (int j = 0; j <= i; ++j) acc += a.coeff(j) * b.coeff(i - j);
        v[static_cast<std::size_t>(i)] = acc;
    }
    return TaylorSeries(std::move(v), min_radius(a, b));
}

TaylorSeries div(const TaylorSeries& a, const TaylorSeries& b) {
    if (std::abs(b.coeff(0)) <= TaylorSeries::kDivisionFloor) {
        throw SingularLeadingCoefficient("div: |b.c_0| at or below division floor");
    }
    const int n = min_order(a, b);
    std::vector<Complex> q(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        Complex acc = a.coeff(i);
        for (int j = 0; j < i; ++j) acc -= q[static_cast<std::size_t>(j)] * b.coeff(i - j);
        q[static_cast<std::size_t>(i)] = acc / b.coeff(0);
    }
    return TaylorSeries(std::move(q), min_radius(a, b));
}

TaylorSeries scale(const TaylorSeries& a, Complex factor) {
    std::vector<Complex> v(a.coeffs().begin(), a.coeffs().end());
    for (Complex& c : v) c *= factor;
    return TaylorSeries(std::move(v), a.ref_radius());
}

TaylorSeries exp_series(const TaylorSeries& s) {
    const int n = s.order();
    std::vector<Complex> e(static_cast<std::size_t>(n) + 1, Complex{0.0, 0.0});
    e[0] = std::exp(s.coeff(0));
    // n e_n = sum_{k=1..n} k s_k e_{n-k}
    for (int i = 1; i <= n; ++i) {
        Complex acc{0.0, 0.0};
        for (int k = 1; k <= i; ++k) {
            acc += static_cast<double>(k) * s.coeff(k) * e[static_cast<std::size_t>(i - k)];
        }
        e[static_cast<std::size_t>(i)] = acc / static_cast<double>(i);
    }
    return TaylorSeries(std::move(e), s.ref_radius());
}

TaylorSeries log_series(const TaylorSeries& s) {
    const Complex c0 = s.coeff(0);
    if (!(std::abs(c0 - Complex{1.0, 0.0}) < 1.0 || c0.real() > 0.0)) {
        throw BranchAmbiguity("log_series: constant term admits no principal branch");
    }
    if (std::abs(c0) <= TaylorSeries::kDivisionFloor) {
        throw BranchAmbiguity("log_series: constant term below division floor");
    }
    const int n = s.order();
    std::vector<Complex> l(static_cast<std::size_t>(n) + 1, Complex{0.0, 0.0});
    l[0] = std::log(c0);
    // n s_0 l_n = n s_n - sum_{k=1..n-1} k l_k s_{n-k}
    for (int i = 1; i <= n; ++i) {
        Complex acc = static_cast<double>(i) * s.coeff(i);
        for (int k = 1; k < i; ++k) {
            acc -= static_cast<double>(k) * l[static_cast<std::size_t>(k)] * s.coeff(i - k);
        }
        l[static_cast<std::size_t>(i)] = acc / (static_cast<double>(i) * c0);
    }
    return TaylorSeries(std::move(l), s.ref_radius());
}

TaylorSeries log_derivative(const TaylorSeries& s) {
    if (std::abs(s.coeff(0)) <= TaylorSeries::kDivisionFloor) {
        throw SingularLeadingCoefficient("log_derivative: |c_0| at or below division floor");
    }
    // z s'(z) has coefficient n*c_n at degree n, so the quotient keeps order N
    // and its constant term is 0/c_0 = 0 exactly.
    const int n = s.order();
    std::vector<Complex> zs(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) zs[static_cast<std::size_t>(i)] = static_cast<double>(i) * s.coeff(i);
    return div(TaylorSeries(std::move(zs), s.ref_radius()), s);
}

TaylorSeries shift_down(const TaylorSeries& s) {
    if (s.coeff(0) != Complex{0.0, 0.0}) {
        throw std::invalid_argument("shift_down: constant term must be exactly 0");
    }
    if (s.order() == 0) return TaylorSeries::zero(0, s.ref_radius());
    std::vector<Complex> v(s.coeffs().begin() + 1, s.coeffs().end());
    return TaylorSeries(std::move(v), s.ref_radius());
}

}  // namespace logharm
