#pragma once

#include "logharm/series.hpp"

namespace logharm::builtin {

/// The constant series 1.
TaylorSeries one(int order = TaylorSeries::kDefaultOrder,
                 double ref_radius = TaylorSeries::kDefaultRadius);

/// (1-z)^{-2(1-alpha)} via the binomial recurrence; the Koebe factor of
/// order alpha.
TaylorSeries koebe_factor(double alpha, int order = TaylorSeries::kDefaultOrder,
                          double ref_radius = TaylorSeries::kDefaultRadius);

/// e^{c z}.
TaylorSeries exp_cz(Complex c, int order = TaylorSeries::kDefaultOrder,
                    double ref_radius = TaylorSeries::kDefaultRadius);

/// Schwarz candidates: z, z/(1+z) = sum (-1)^{n+1} z^n, and 0.
TaylorSeries schwarz_identity(int order = TaylorSeries::kDefaultOrder,
                              double ref_radius = TaylorSeries::kDefaultRadius);
TaylorSeries schwarz_mobius(int order = TaylorSeries::kDefaultOrder,
                            double ref_radius = TaylorSeries::kDefaultRadius);
TaylorSeries schwarz_zero(int order = TaylorSeries::kDefaultOrder,
                          double ref_radius = TaylorSeries::kDefaultRadius);

/// Default witness radius for z/(1+z): its range stays inside the closed
/// unit disc up to 1/2; 0.45 keeps constructed maps strictly starlike.
constexpr double kMobiusDefaultRadius = 0.45;

}  // namespace logharm::builtin
