#include "logharm/builtins.hpp"

#include <cmath>

namespace logharm::builtin {

TaylorSeries one(int order, double ref_radius) {
    return TaylorSeries::one(order, ref_radius);
}

TaylorSeries koebe_factor(double alpha, int order, double ref_radius) {
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("koebe_factor: alpha must lie in [0, 1)");
    }
    // (1-z)^{-p} with p = 2(1-alpha): c_0 = 1, c_n = c_{n-1} (p + n - 1)/n.
    const double p = 2.0 * (1.0 - alpha);
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    c[0] = {1.0, 0.0};
    for (int n = 1; n <= order; ++n) {
        c[static_cast<std::size_t>(n)] =
            c[static_cast<std::size_t>(n - 1)] * ((p + n - 1.0) / n);
    }
    return TaylorSeries(std::move(c), ref_radius);
}

TaylorSeries exp_cz(Complex c, int order, double ref_radius) {
    std::vector<Complex> v(static_cast<std::size_t>(order) + 1);
    v[0] = {1.0, 0.0};
    for (int n = 1; n <= order; ++n) {
        v[static_cast<std::size_t>(n)] = v[static_cast<std::size_t>(n - 1)] * c / double(n);
    }
    return TaylorSeries(std::move(v), ref_radius);
}

TaylorSeries schwarz_identity(int order, double ref_radius) {
    return TaylorSeries::identity(order, ref_radius);
}

TaylorSeries schwarz_mobius(int order, double ref_radius) {
    std::vector<Complex> v(static_cast<std::size_t>(order) + 1, Complex{0.0, 0.0});
    double sign = 1.0;
    for (int n = 1; n <= order; ++n) {
        v[static_cast<std::size_t>(n)] = {sign, 0.0};
        sign = -sign;
    }
    return TaylorSeries(std::move(v), ref_radius);
}

TaylorSeries schwarz_zero(int order, double ref_radius) {
    return TaylorSeries::zero(order, ref_radius);
}

}  // namespace logharm::builtin
