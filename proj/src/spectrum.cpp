#include "mmsp/spectrum.hpp"

#include <cmath>
#include <stdexcept>

#include "mmsp/errors.hpp"

namespace mmsp {

void QuantumNumbers::validate() const {
    if (n < 0 || l < 0) throw std::invalid_argument("quantum numbers must be >= 0");
}

double chi_value(const DimensionlessParams& d, int n) {
    if (n < 0) throw std::invalid_argument("chi_value: n must be >= 0");
    const double radicand = 0.25 - d.delta + d.gamma - d.eta - d.beta;
    if (radicand < 0.0)
        throw SupercriticalError(
            "chi_value: fall-to-center criterion violated, "
            "mu V0 (A+B)^2 / (2 hbar^2 alpha^2) > 1/4 + l(l+1)");
    return n + 0.5 + std::sqrt(radicand);
}

SpectrumRecord energy_level(const PotentialParams& p, const PhysicalContext& ctx,
                            const QuantumNumbers& qn, const ApproximationScheme& scheme) {
    qn.validate();
    const DimensionlessParams d = to_dimensionless(p, ctx, qn.l, scheme.c0);
    const double chi = chi_value(d, qn.n);
    const double c0e = scheme.c0_eff();

    const double bracket = (d.eta - d.beta - chi * chi) / chi;
    const double unit = ctx.hbar * ctx.hbar * p.alpha * p.alpha / ctx.mu;  // energy scale

    SpectrumRecord rec;
    rec.qn = qn;
    rec.scheme = scheme;
    rec.chi = chi;
    rec.s_exponent = 0.5 * bracket;  // signed; > 0 required for normalizability
    rec.energy = 2.0 * unit * c0e * d.gamma - p.v0 * p.a_coef * p.a_coef
                 - 0.5 * unit * bracket * bracket;
    rec.validity = bound_state_validity(rec, p, ctx);
    return rec;
}

ValidityFlags bound_state_validity(const SpectrumRecord& rec, const PotentialParams& p,
                                   const PhysicalContext& ctx) {
    (void)ctx;
    ValidityFlags f;
    const double threshold = -p.v0 * p.a_coef * p.a_coef;  // V(infinity)
    f.non_normalizable = !(rec.s_exponent > 0.0);
    f.above_threshold = !(rec.energy < threshold);
    f.valid = !f.non_normalizable && (rec.qn.l > 0 || !f.above_threshold);
    return f;
}

SpectrumEnumeration enumerate_spectrum(const PotentialParams& p, const PhysicalContext& ctx,
                                       int l, const ApproximationScheme& scheme, int n_limit) {
    if (n_limit < 0) throw std::invalid_argument("enumerate_spectrum: n_limit must be >= 0");
    SpectrumEnumeration out;
    out.records.reserve(n_limit + 1);

    bool ladder_alive = true;
    double prev_energy = 0.0;
    for (int n = 0; n <= n_limit; ++n) {
        SpectrumRecord rec = energy_level(p, ctx, {n, l}, scheme);
        if (ladder_alive && rec.validity.valid &&
            (n == 0 || rec.energy > prev_energy)) {
            out.n_max = n;
            prev_energy = rec.energy;
        } else {
            ladder_alive = false;
            rec.validity.valid = false;
        }
        out.records.push_back(rec);
    }
    return out;
}

}  // namespace mmsp
