#include "mmsp/nu.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mmsp/errors.hpp"

namespace mmsp {

SigmaTildeCoeffs sigma_tilde_coeffs(const DimensionlessParams& d,
                                    const ApproximationScheme& scheme) {
    if (!d.eps_n)
        throw std::logic_error("sigma_tilde_coeffs: eps_n must be set (trial energy required)");
    const double eps = *d.eps_n;
    const double c0e = scheme.kind == ApproximationScheme::Kind::PekerisType ? d.c0 : 0.0;
    SigmaTildeCoeffs c;
    c.xi1 = eps - d.beta + d.gamma * c0e;
    c.xi2 = 2.0 * eps + d.delta + d.gamma * (2.0 * c0e - 1.0);
    c.xi3 = eps - d.eta + d.gamma * c0e;
    return c;
}

NuIntermediates nu_intermediates(const SigmaTildeCoeffs& coeffs) {
    NuIntermediates in;
    in.a_const = 0.25 + coeffs.xi1;
    in.b_const = -coeffs.xi2;
    in.c_const = coeffs.xi3;

    const double q = in.a_const + in.b_const + in.c_const;
    if (q < 0.0)
        throw NegativeDiscriminantError(
            "nu_intermediates: 1/4 - delta + gamma - eta - beta < 0 "
            "(supercritical potential, no real NU solution)");
    if (in.c_const < 0.0)
        throw NegativeCError(
            "nu_intermediates: c < 0 (trial energy above the s->0 binding threshold)");

    in.sqrt_q = std::sqrt(q);
    in.sqrt_c = std::sqrt(in.c_const);
    // Zero-discriminant root of (a-k)s^2 + (b+k)s + c with the minus sign.
    in.k_minus = -in.b_const - 2.0 * in.c_const - 2.0 * in.sqrt_c * in.sqrt_q;
    // lambda = k + pi' with pi'(s) = -1/2 - (sqrt_q + sqrt_c)
    in.lambda_val = in.k_minus - 0.5 - (in.sqrt_q + in.sqrt_c);
    in.exponent_s = in.sqrt_c;
    in.exponent_one_minus_s = 0.5 + in.sqrt_q;
    return in;
}

double lambda_n(int n, const NuIntermediates& inter) {
    if (n < 0) throw std::invalid_argument("lambda_n: n must be >= 0");
    const double nn = n;
    return nn * (2.0 + 2.0 * (inter.sqrt_q + inter.sqrt_c)) + nn * (nn - 1.0);
}

namespace {

double quantization_residual(const DimensionlessParams& base, double eps, int n,
                             const ApproximationScheme& scheme) {
    DimensionlessParams d = base;
    d.eps_n = eps;
    const NuIntermediates in = nu_intermediates(sigma_tilde_coeffs(d, scheme));
    return in.lambda_val - lambda_n(n, in);
}

}  // namespace

double solve_quantization(const PotentialParams& p, const PhysicalContext& ctx,
                          int n, int l, const ApproximationScheme& scheme) {
    if (n < 0) throw std::invalid_argument("solve_quantization: n must be >= 0");
    DimensionlessParams d = to_dimensionless(p, ctx, l, scheme.c0);

    // Radicand is energy-independent; fail fast on supercritical input.
    const double q = 0.25 - d.delta + d.gamma - d.eta - d.beta;
    if (q < 0.0)
        throw NegativeDiscriminantError(
            "solve_quantization: supercritical potential (fall to center)");

    const double c0e = scheme.c0_eff();
    const double lower = std::max(d.eta - d.gamma * c0e, 0.0);
    const double span = 10.0 * (1.0 + d.eta + d.beta + d.delta + d.gamma);

    // Geometric scan of the offset above the lower bound to find a bracket.
    constexpr int kScanPoints = 256;
    const double off_lo = 1e-9;
    const double ratio = std::pow(span / off_lo, 1.0 / (kScanPoints - 1));
    double eps_lo = lower + off_lo;
    double f_lo = quantization_residual(d, eps_lo, n, scheme);
    double eps_hi = 0.0, f_hi = 0.0;
    bool bracketed = false;
    double off = off_lo;
    for (int i = 1; i < kScanPoints; ++i) {
        off *= ratio;
        const double eps = lower + off;
        const double f = quantization_residual(d, eps, n, scheme);
        if ((f_lo > 0.0) != (f > 0.0)) {
            eps_hi = eps;
            f_hi = f;
            bracketed = true;
            break;
        }
        eps_lo = eps;
        f_lo = f;
    }
    if (!bracketed)
        throw NoBoundStateError(
            "solve_quantization: no sign change of lambda - lambda_n in the "
            "admissible energy window (no binding for this n, l)");

    (void)f_hi;
    // Bisection; tolerance floored at a few ulps of the bracket magnitude.
    while (true) {
        const double width = eps_hi - eps_lo;
        const double scale = std::max(std::abs(eps_lo), std::abs(eps_hi));
        const double tol = std::max(1e-12, 4.0 * scale * 2.22e-16);
        if (width <= tol) break;
        const double mid = 0.5 * (eps_lo + eps_hi);
        const double f_mid = quantization_residual(d, mid, n, scheme);
        if ((f_lo > 0.0) != (f_mid > 0.0)) {
            eps_hi = mid;
        } else {
            eps_lo = mid;
            f_lo = f_mid;
        }
    }
    return 0.5 * (eps_lo + eps_hi);
}

}  // namespace mmsp
