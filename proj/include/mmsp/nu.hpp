#pragma once

#include "mmsp/model.hpp"

namespace mmsp {

/// Coefficients of sigma-tilde(s) = -xi1 s^2 + xi2 s - xi3 for the
/// transformed radial equation with sigma(s) = s(1-s), tau-tilde(s) = 1-s.
struct SigmaTildeCoeffs {
    double xi1;
    double xi2;
    double xi3;
};

struct NuIntermediates {
    double a_const;  // 1/4 + xi1
    double b_const;  // -xi2
    double c_const;  // xi3
    double k_minus;
    double sqrt_q;   // sqrt(a + b + c)
    double sqrt_c;   // sqrt(c)
    double lambda_val;            // k_minus + pi'(s)
    double exponent_s;            // power of s in Phi
    double exponent_one_minus_s;  // power of (1-s) in Phi
};

SigmaTildeCoeffs sigma_tilde_coeffs(const DimensionlessParams& d,
                                    const ApproximationScheme& scheme);

/// k_minus branch only (the one with tau'(s) < 0).
NuIntermediates nu_intermediates(const SigmaTildeCoeffs& coeffs);

/// lambda_n = -n tau' - n(n-1)/2 sigma'' with sigma'' = -2.
double lambda_n(int n, const NuIntermediates& inter);

/// Numerical root of lambda(eps) = lambda_n(n, eps) by bracketing and
/// bisection.  Cross-checks the closed-form spectrum.
double solve_quantization(const PotentialParams& p, const PhysicalContext& ctx,
                          int n, int l, const ApproximationScheme& scheme);

}  // namespace mmsp
