#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "logharm/errors.hpp"

namespace logharm {

using Complex = std::complex<double>;

/// Truncated complex power series c_0 + c_1 z + ... + c_N z^N with a trusted
/// evaluation radius. Values are immutable; every operation returns a fresh
/// series. Results of binary operations are truncated to the smaller order
/// and carry the smaller ref_radius of the operands.
class TaylorSeries {
public:
    static constexpr int kDefaultOrder = 64;
    static constexpr double kDefaultRadius = 0.95;
    /// Leading coefficients with modulus at or below this floor refuse division.
    static constexpr double kDivisionFloor = 1e-12;

    /// coeffs is c_0..c_N; all components must be finite, radius in (0, 1].
    explicit TaylorSeries(std::vector<Complex> coeffs, double ref_radius = kDefaultRadius);

    /// Constant series c, zero-padded to `order`.
    static TaylorSeries constant(Complex c, int order = kDefaultOrder,
                                 double ref_radius = kDefaultRadius);
    static TaylorSeries zero(int order = kDefaultOrder, double ref_radius = kDefaultRadius);
    static TaylorSeries one(int order = kDefaultOrder, double ref_radius = kDefaultRadius);
    /// The identity series z, zero-padded to `order`.
    static TaylorSeries identity(int order = kDefaultOrder, double ref_radius = kDefaultRadius);
    /// Polynomial from the leading coefficients, zero-padded to `order`.
    static TaylorSeries polynomial(std::initializer_list<Complex> coeffs,
                                   int order = kDefaultOrder,
                                   double ref_radius = kDefaultRadius);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    double ref_radius() const { return ref_radius_; }
    std::span<const Complex> coeffs() const { return coeffs_; }
    /// c_n, or 0 beyond the truncation order.
    Complex coeff(int n) const;

    /// Same coefficients, different trusted radius.
    TaylorSeries with_ref_radius(double r) const;
    /// Same coefficients truncated or zero-padded to `order`.
    TaylorSeries truncated(int order) const;

    /// Horner sum of all N+1 terms. Requires |z| <= ref_radius (a 1e-12
    /// absolute slack absorbs rounding of boundary samples r*e^{i theta}).
    Complex eval(Complex z) const;

    /// Termwise n*c_n, order N-1.
    TaylorSeries derivative() const;
    /// Termwise c_n/(n+1) with constant term 0, order N+1.
    TaylorSeries antiderivative() const;

private:
    std::vector<Complex> coeffs_;
    double ref_radius_;
};

TaylorSeries add(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries sub(const TaylorSeries& a, const TaylorSeries& b);
/// Cauchy product truncated to min(N_a, N_b).
TaylorSeries mul(const TaylorSeries& a, const TaylorSeries& b);
/// Long division; requires |b.c_0| > kDivisionFloor.
TaylorSeries div(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries scale(const TaylorSeries& a, Complex factor);

/// exp of a series via the ODE recurrence E' = s'E.
TaylorSeries exp_series(const TaylorSeries& s);

/// Principal-branch log via L' = s'/s, anchored at log(c_0). Requires
/// |c_0 - 1| < 1 or Re(c_0) > 0 so the principal branch is unambiguous.
TaylorSeries log_series(const TaylorSeries& s);

/// The series of z s'(z)/s(z); its constant term is exactly 0.
TaylorSeries log_derivative(const TaylorSeries& s);

/// Coefficient left shift s(z)/z; requires c_0 == 0 exactly.
TaylorSeries shift_down(const TaylorSeries& s);

inline TaylorSeries operator+(const TaylorSeries& a, const TaylorSeries& b) { return add(a, b); }
inline TaylorSeries operator-(const TaylorSeries& a, const TaylorSeries& b) { return sub(a, b); }
inline TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b) { return mul(a, b); }
inline TaylorSeries operator/(const TaylorSeries& a, const TaylorSeries& b) { return div(a, b); }
inline TaylorSeries operator*(Complex c, const TaylorSeries& a) { return scale(a, c); }
inline TaylorSeries operator*(const TaylorSeries& a, Complex c) { return scale(a, c); }

}  // namespace logharm
