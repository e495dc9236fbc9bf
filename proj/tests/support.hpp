#pragma once

// Shared test helpers: randomized parameter-set samplers and independent
// reference implementations used as oracles.

#include <cmath>
#include <random>

#include "mmsp/model.hpp"

namespace mmsp_test {

// A parameter set together with the quantum numbers it is guaranteed to bind.
struct BoundCase {
    mmsp::PotentialParams params;
    mmsp::PhysicalContext ctx;
    int n;
    int l;
};

// Sample a subcritical MMSP parameter set with a genuine bound state at
// (n, l).  Construction: pick d = sqrt(eta) - sqrt(beta) below the
// fall-to-center limit, then scale S = sqrt(eta) + sqrt(beta) so that
// eta - beta = S d comfortably exceeds chi^2 (the binding condition).
// B < 0 throughout; with A, B > 0 no s-wave bound state exists.
inline BoundCase sample_bound_case(std::mt19937& rng, int n_req, int l_req) {
    const double gamma = static_cast<double>(l_req) * (l_req + 1);
    const double d_cap = std::sqrt(0.25 + gamma);
    std::uniform_real_distribution<double> d_dist(0.3 * d_cap, 0.9 * d_cap);
    std::uniform_real_distribution<double> margin(1.2, 2.0);
    std::uniform_real_distribution<double> alpha_dist(0.2, 1.0);
    std::uniform_real_distribution<double> v0_dist(0.5, 3.0);

    const double d = d_dist(rng);
    const double q = 0.25 + gamma - d * d;
    const double chi = n_req + 0.5 + std::sqrt(q);
    const double s = chi * chi / d * margin(rng);  // eta - beta = s * d > chi^2
    const double eta = 0.25 * (s + d) * (s + d);
    const double beta = 0.25 * (s - d) * (s - d);

    BoundCase bc;
    bc.ctx = {1.0, 1.0};
    bc.n = n_req;
    bc.l = l_req;
    bc.params.alpha = alpha_dist(rng);
    bc.params.v0 = v0_dist(rng);
    bc.params.a_coef = bc.params.alpha * std::sqrt(2.0 * eta / bc.params.v0);
    bc.params.b_coef = -bc.params.alpha * std::sqrt(2.0 * beta / bc.params.v0);
    return bc;
}

// Any subcritical parameter set at l = 0 (no binding requirement).
inline mmsp::PotentialParams sample_subcritical(std::mt19937& rng) {
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_real_distribution<double> alpha_dist(0.3, 2.0);
    std::uniform_real_distribution<double> v0_dist(0.1, 3.0);
    while (true) {
        mmsp::PotentialParams p{v0_dist(rng), coef(rng), coef(rng), alpha_dist(rng)};
        if (p.a_coef == 0.0 && p.b_coef == 0.0) continue;
        const double sum = p.a_coef + p.b_coef;
        // radicand at l = 0: 1/4 - mu V0 (A+B)^2 / (2 hbar^2 alpha^2)
        if (p.v0 * sum * sum / (2.0 * p.alpha * p.alpha) <= 0.25) return p;
    }
}

// Explicit finite-sum Jacobi polynomial (independent of the recurrence):
//   P_n^{(a,b)}(x) = sum_k C(n+a, n-k) C(n+b, k) ((x-1)/2)^k ((x+1)/2)^{n-k}
// with generalized binomials via lgamma (valid for a, b > -1).
inline double jacobi_series(int n, double a, double b, double x) {
    auto gbinom = [](double top, int bottom, int n_total) {
        // C(n_total + top, n_total - bottom) with real `top`
        const double num = std::lgamma(n_total + top + 1.0);
        const double den =
            std::lgamma(top + bottom + 1.0) + std::lgamma(n_total - bottom + 1.0);
        return std::exp(num - den);
    };
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double c1 = gbinom(a, k, n);  // C(n+a, n-k)
        const double cb = std::exp(std::lgamma(n + b + 1.0) -
                                   std::lgamma(n + b - k + 1.0) -
                                   std::lgamma(k + 1.0));  // C(n+b, k)
        sum += c1 * cb * std::pow(0.5 * (x - 1.0), k) * std::pow(0.5 * (x + 1.0), n - k);
    }
    return sum;
}

}  // namespace mmsp_test
