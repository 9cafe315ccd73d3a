#pragma once

#include <vector>

#include "loopdens/bigfloat.hpp"
#include "loopdens/lattice.hpp"

namespace loopdens {

struct DensitySample {
    LatticeParams params;
    BigFloat nu; // total loop density, high precision
};

/// Bulk density (3 sqrt3 - 5)/2, evaluated at working precision.
BigFloat nu_infinity(long digits);
/// Universal coefficient 5 sqrt3 / 24 of the 1/s^2 correction.
BigFloat conformal_coefficient(long digits);

/// (nu - nu_inf) * s^2 with s^2 = l^2 (m^2+n^2)/2; converges to
/// 5 sqrt3/24 as l grows.
BigFloat scaled_deviation(const DensitySample& sample);

struct FitResult {
    double alpha = 0;
    double a = 0;
    double b = 0; // meaningful for order 2
    double residual_norm = 0;
    int l_min = 0;
    int l_max = 0;
    int order = 2;
};

/// Least squares of y = s^4 (nu - nu_inf - (5 sqrt3/24)/s^2) against 1
/// (order 1) or {1, 1/s^2} (order 2) for samples at fixed (m, n). Needs at
/// least order + 3 samples with distinct l; throws rank_deficiency_error
/// on degenerate sets.
FitResult fit_corrections(const std::vector<DensitySample>& samples, int order);

/// Alternative b estimate: subtract the fitted a-term and rescale by s^6,
/// averaging over the largest-l half of the samples.
double sequential_b(const std::vector<DensitySample>& samples, double a);

struct AngleCoefficients {
    double c1 = 0; // a(alpha) ~ c1 cos(4 alpha) + c2
    double c2 = 0;
    double c3 = 0;            // b(alpha) ~ c3 cos(8 alpha)
    double c3_with_const = 0; // same fit allowing a constant term
    double c4 = 0;
    double residual_a = 0;
    double residual_b = 0;
    double residual_b_const = 0;
};

/// Cosine fits of the correction coefficients across tilt angles. The
/// b-fit is reported both with and without a constant term. Needs >= 4
/// distinct angles.
AngleCoefficients angle_coefficients(const std::vector<FitResult>& sweep);

} // namespace loopdens
