#include "mmsp/model.hpp"

#include <cmath>
#include <stdexcept>

#include "mmsp/errors.hpp"

namespace mmsp {

void PotentialParams::validate() const {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
    if (!std::isfinite(v0) || !std::isfinite(a_coef) || !std::isfinite(b_coef))
        throw std::invalid_argument("potential parameters must be finite");
    if (a_coef == 0.0 && b_coef == 0.0)
        throw std::invalid_argument("A and B must not both be zero");
}

void PhysicalContext::validate() const {
    if (!(mu > 0.0) || !(hbar > 0.0))
        throw std::invalid_argument("mu and hbar must be > 0");
}

double eval_potential(const PotentialParams& p, double r) {
    if (!(r > 0.0)) throw std::domain_error("eval_potential: r must be > 0");
    const double s = std::exp(-2.0 * p.alpha * r);
    const double ratio = (p.a_coef + p.b_coef * s) / (1.0 - s);
    return -p.v0 * ratio * ratio;
}

DimensionlessParams to_dimensionless(const PotentialParams& p, const PhysicalContext& ctx,
                                     int l, double c0, std::optional<double> energy) {
    p.validate();
    ctx.validate();
    if (l < 0) throw std::invalid_argument("orbital quantum number l must be >= 0");

    const double k = ctx.mu / (2.0 * ctx.hbar * ctx.hbar * p.alpha * p.alpha);
    DimensionlessParams d;
    d.beta = k * p.v0 * p.b_coef * p.b_coef;
    d.eta = k * p.v0 * p.a_coef * p.a_coef;
    d.delta = 2.0 * k * p.v0 * p.a_coef * p.b_coef;
    d.gamma = static_cast<double>(l) * (l + 1);
    d.c0 = c0;
    if (energy) d.eps_n = -k * (*energy);
    return d;
}

double centrifugal_approx(const ApproximationScheme& scheme, double alpha, double r) {
    if (!(r > 0.0)) throw std::domain_error("centrifugal_approx: r must be > 0");
    if (!(alpha > 0.0)) throw std::domain_error("centrifugal_approx: alpha must be > 0");
    const double s = std::exp(-2.0 * alpha * r);
    const double t = s / (1.0 - s);
    // t + t^2 == s / (1-s)^2, the Greene-Aldrich kernel
    const double ga = t + t * t;
    const double four_a2 = 4.0 * alpha * alpha;
    if (scheme.kind == ApproximationScheme::Kind::PekerisType)
        return four_a2 * (scheme.c0 + ga);
    return four_a2 * ga;
}

std::vector<ApproxErrorRow> approx_error_table(const ApproximationScheme& scheme,
                                               const PotentialParams& p,
                                               const std::vector<double>& r_grid) {
    std::vector<ApproxErrorRow> rows;
    rows.reserve(r_grid.size());
    double prev = 0.0;
    bool first = true;
    for (double r : r_grid) {
        if (!(r > 0.0)) throw std::domain_error("approx_error_table: grid values must be > 0");
        if (!first && !(r > prev))
            throw std::invalid_argument("approx_error_table: grid must be strictly increasing");
        first = false;
        prev = r;
        const double exact = 1.0 / (r * r);
        const double approx = centrifugal_approx(scheme, p.alpha, r);
        rows.push_back({r, exact, approx, (approx - exact) * r * r});
    }
    return rows;
}

}  // namespace mmsp
