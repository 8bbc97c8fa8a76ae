#include <cmath>
#include <random>

#include "doctest.h"
#include "logharm/series.hpp"

using namespace logharm;

namespace {

// Brute-force power sum, the independent oracle for Horner evaluation.
Complex naive_eval(const TaylorSeries& s, Complex z) {
    Complex acc{0.0, 0.0};
    Complex power{1.0, 0.0};
    for (int n = 0; n <= s.order(); ++n) {
        acc += s.coeff(n) * power;
        power *= z;
    }
    return acc;
}

double max_coeff_error(const TaylorSeries& a, const TaylorSeries& b) {
    double worst = 0.0;
    const int n = std::min(a.order(), b.order());
    for (int i = 0; i <= n; ++i) worst = std::max(worst, std::abs(a.coeff(i) - b.coeff(i)));
    return worst;
}

// Coefficients uniform over the disc |c| <= coeff_scale.
TaylorSeries random_series(std::mt19937_64& rng, int order, double coeff_scale,
                           Complex c0 = {1.0, 0.0}) {
    std::uniform_real_distribution<double> mag(0.0, coeff_scale);
    std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    c[0] = c0;
    for (int n = 1; n <= order; ++n) {
        const double m = mag(rng), t = ang(rng);
        c[static_cast<std::size_t>(n)] = Complex{m * std::cos(t), m * std::sin(t)};
    }
    return TaylorSeries(std::move(c));
}

TaylorSeries geometric(int order, double radius = TaylorSeries::kDefaultRadius) {
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex{1.0, 0.0});
    return TaylorSeries(std::move(c), radius);
}

}  // namespace

TEST_CASE("eval: constant, identity, geometric closed form") {
    CHECK(TaylorSeries::one(0).eval({0.3, 0.1}) == Complex{1.0, 0.0});

    const Complex z0{-0.21, 0.4};
    CHECK(TaylorSeries::identity(1).eval(z0) == z0);

    // sum_{n<=64} z^n vs 1/(1-z) at z = 0.5
    const Complex v = geometric(64).eval({0.5, 0.0});
    CHECK(std::abs(v - Complex{2.0, 0.0}) < 1e-12);
}

TEST_CASE("eval refuses points outside the trusted radius and non-finite input") {
    const TaylorSeries s = geometric(8);
    CHECK_THROWS_AS(s.eval({0.96, 0.0}), PointOutsideRadius);
    CHECK_THROWS_AS(s.eval({std::nan(""), 0.0}), std::invalid_argument);
    CHECK_NOTHROW(s.eval({0.95, 0.0}));
}

TEST_CASE("constructor rejects non-finite coefficients and bad radii") {
    CHECK_THROWS_AS(TaylorSeries({Complex{1.0, std::nan("")}}), std::invalid_argument);
    CHECK_THROWS_AS(TaylorSeries({Complex{1.0, 0.0}}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(TaylorSeries({Complex{1.0, 0.0}}, 1.5), std::invalid_argument);
}

TEST_CASE("mul: hand cases and identities") {
    const TaylorSeries one_plus = TaylorSeries::polynomial({{1.0, 0.0}, {1.0, 0.0}}, 8);
    const TaylorSeries one_minus = TaylorSeries::polynomial({{1.0, 0.0}, {-1.0, 0.0}}, 8);
    const TaylorSeries prod = mul(one_plus, one_minus);
    CHECK(prod.coeff(0) == Complex{1.0, 0.0});
    CHECK(prod.coeff(1) == Complex{0.0, 0.0});
    CHECK(prod.coeff(2) == Complex{-1.0, 0.0});
    for (int n = 3; n <= prod.order(); ++n) CHECK(prod.coeff(n) == Complex{0.0, 0.0});

    // (1/(1-z)) * (1-z) = 1 exactly through degree 31
    const TaylorSeries recon = mul(geometric(32), TaylorSeries::polynomial({{1, 0}, {-1, 0}}, 32));
    CHECK(recon.coeff(0) == Complex{1.0, 0.0});
    for (int n = 1; n <= 31; ++n) CHECK(std::abs(recon.coeff(n)) == 0.0);

    // multiplicative identity
    std::mt19937_64 rng(7);
    const TaylorSeries a = random_series(rng, 16, 1.0);
    CHECK(max_coeff_error(mul(a, TaylorSeries::one(16)), a) == 0.0);
}

TEST_CASE("div: geometric recurrence oracle, self-division, singular leading coefficient") {
    const TaylorSeries q = div(TaylorSeries::one(32), TaylorSeries::polynomial({{1, 0}, {-1, 0}}, 32));
    for (int n = 0; n <= 32; ++n) CHECK(std::abs(q.coeff(n) - Complex{1.0, 0.0}) < 1e-14);

    std::mt19937_64 rng(11);
    const TaylorSeries a = random_series(rng, 24, 0.5);
    const TaylorSeries self = div(a, a);
    CHECK(std::abs(self.coeff(0) - Complex{1.0, 0.0}) < 1e-14);
    for (int n = 1; n <= 24; ++n) CHECK(std::abs(self.coeff(n)) < 1e-13);

    CHECK_THROWS_AS(div(a, TaylorSeries::identity(8)), SingularLeadingCoefficient);
}

TEST_CASE("derivative and antiderivative") {
    const TaylorSeries s = TaylorSeries::polynomial({{1, 0}, {1, 0}, {1, 0}}, 2);
    const TaylorSeries d = s.derivative();
    CHECK(d.order() == 1);
    CHECK(d.coeff(0) == Complex{1.0, 0.0});
    CHECK(d.coeff(1) == Complex{2.0, 0.0});

    const TaylorSeries a = TaylorSeries::one(0).antiderivative();
    CHECK(a.order() == 1);
    CHECK(a.coeff(0) == Complex{0.0, 0.0});
    CHECK(a.coeff(1) == Complex{1.0, 0.0});
}

TEST_CASE("property: derivative(antiderivative(s)) recovers s to the last ulp") {
    // (c/(n+1))*(n+1) rounds once each way, so demand <= 1 ulp, not bit equality
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const TaylorSeries s = random_series(rng, 32, 1.0, {0.4, -0.7});
        const TaylorSeries round = s.antiderivative().derivative();
        CHECK(round.order() == s.order());
        CHECK(max_coeff_error(round, s) < 1e-15);
    }
}

TEST_CASE("property: antiderivative(derivative(s)) recovers s minus its constant term") {
    std::mt19937_64 rng(29);
    const TaylorSeries s = random_series(rng, 16, 1.0, {2.0, 1.0});
    const TaylorSeries round = s.derivative().antiderivative();
    CHECK(round.coeff(0) == Complex{0.0, 0.0});
    for (int n = 1; n <= 16; ++n) CHECK(std::abs(round.coeff(n) - s.coeff(n)) < 1e-15);
}

TEST_CASE("exp_series: trivial and factorial closed form") {
    const TaylorSeries e0 = exp_series(TaylorSeries::zero(4));
    CHECK(e0.coeff(0) == Complex{1.0, 0.0});
    for (int n = 1; n <= 4; ++n) CHECK(e0.coeff(n) == Complex{0.0, 0.0});

    // exp(2z): coefficients 2^n / n!
    const TaylorSeries e = exp_series(TaylorSeries::polynomial({{0, 0}, {2, 0}}, 24));
    double expected = 1.0;
    for (int n = 0; n <= 20; ++n) {
        CHECK(std::abs(e.coeff(n) - Complex{expected, 0.0}) < 1e-12);
        expected *= 2.0 / (n + 1);
    }
}

TEST_CASE("log_series: Mercator oracle and branch guard") {
    const TaylorSeries l = log_series(TaylorSeries::polynomial({{1, 0}, {-1, 0}}, 24));
    CHECK(l.coeff(0) == Complex{0.0, 0.0});
    for (int n = 1; n <= 24; ++n) {
        CHECK(std::abs(l.coeff(n) - Complex{-1.0 / n, 0.0}) < 1e-13);
    }

    CHECK_THROWS_AS(log_series(TaylorSeries::constant({-2.0, 0.0}, 4)), BranchAmbiguity);
    CHECK_THROWS_AS(log_series(TaylorSeries::zero(4)), BranchAmbiguity);
}

TEST_CASE("property: exp/log round trip below 1e-10 at order 32") {
    std::mt19937_64 rng(31);
    double worst = 0.0;
    for (int trial = 0; trial < 25; ++trial) {
        const TaylorSeries s = random_series(rng, 32, 1.0);
        worst = std::max(worst, max_coeff_error(exp_series(log_series(s)), s));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("log_derivative: constant, 1+z, Koebe factor") {
    const TaylorSeries zero_ld = log_derivative(TaylorSeries::one(8));
    for (int n = 0; n <= 8; ++n) CHECK(zero_ld.coeff(n) == Complex{0.0, 0.0});

    // z(1+z)'/(1+z) = z - z^2 + z^3 - ...
    const TaylorSeries ld = log_derivative(TaylorSeries::polynomial({{1, 0}, {1, 0}}, 16));
    CHECK(ld.coeff(0) == Complex{0.0, 0.0});
    for (int n = 1; n <= 16; ++n) {
        const double sign = (n % 2 == 1) ? 1.0 : -1.0;
        CHECK(std::abs(ld.coeff(n) - Complex{sign, 0.0}) < 1e-13);
    }

    // (1-z)^{-2}: z h'/h = 2z/(1-z), all coefficients 2 from degree 1
    std::vector<Complex> koebe(17);
    for (int n = 0; n <= 16; ++n) koebe[static_cast<std::size_t>(n)] = {double(n + 1), 0.0};
    const TaylorSeries k = log_derivative(TaylorSeries(std::move(koebe)));
    CHECK(k.coeff(0) == Complex{0.0, 0.0});
    for (int n = 1; n <= 16; ++n) CHECK(std::abs(k.coeff(n) - Complex{2.0, 0.0}) < 1e-12);
}

TEST_CASE("property: ring distributivity (a+b)c == ac + bc coefficientwise") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const TaylorSeries a = random_series(rng, 20, 1.0, {0.3, 0.0});
        const TaylorSeries b = random_series(rng, 20, 1.0, {-0.2, 0.5});
        const TaylorSeries c = random_series(rng, 20, 1.0, {1.0, -1.0});
        CHECK(max_coeff_error(mul(add(a, b), c), add(mul(a, c), mul(b, c))) < 1e-12);
    }
}

TEST_CASE("property: Horner evaluation matches brute-force summation") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> ur(0.0, 0.9);
    std::uniform_real_distribution<double> ut(0.0, 6.283185307179586);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const TaylorSeries s = random_series(rng, 40, 1.0);
        const double r = ur(rng), t = ut(rng);
        const Complex z{r * std::cos(t), r * std::sin(t)};
        worst = std::max(worst, std::abs(s.eval(z) - naive_eval(s, z)));
    }
    CHECK(worst < 1e-13);
}

TEST_CASE("operations truncate to the smaller order and radius") {
    const TaylorSeries a = geometric(16, 0.9);
    const TaylorSeries b = geometric(32, 0.8);
    const TaylorSeries p = mul(a, b);
    CHECK(p.order() == 16);
    CHECK(p.ref_radius() == 0.8);
}

TEST_CASE("shift_down requires a vanishing constant term") {
    const TaylorSeries z = TaylorSeries::identity(8);
    const TaylorSeries shifted = shift_down(z);
    CHECK(shifted.order() == 7);
    CHECK(shifted.coeff(0) == Complex{1.0, 0.0});
    CHECK_THROWS_AS(shift_down(TaylorSeries::one(8)), std::invalid_argument);
}
