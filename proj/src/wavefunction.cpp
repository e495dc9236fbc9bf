#include "mmsp/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mmsp/errors.hpp"

namespace mmsp {

double jacobi_p(const JacobiParams& jp, double x) {
    if (jp.degree < 0) throw std::invalid_argument("jacobi_p: degree must be >= 0");
    if (!(jp.alpha_idx > -1.0) || !(jp.beta_idx > -1.0))
        throw std::invalid_argument("jacobi_p: indices must be > -1");
    if (std::abs(x) > 1.0 + 1e-12)
        throw std::domain_error("jacobi_p: argument outside [-1, 1]");

    const double a = jp.alpha_idx, b = jp.beta_idx;
    if (jp.degree == 0) return 1.0;
    double pm2 = 1.0;
    double pm1 = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    for (int k = 2; k <= jp.degree; ++k) {
        const double apb = a + b;
        const double c1 = 2.0 * k * (k + apb) * (2.0 * k + apb - 2.0);
        const double c2 = (2.0 * k + apb - 1.0) * (a * a - b * b);
        const double c3 = (2.0 * k + apb - 1.0) * (2.0 * k + apb) * (2.0 * k + apb - 2.0);
        const double c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + apb);
        const double pk = ((c2 + c3 * x) * pm1 - c4 * pm2) / c1;
        pm2 = pm1;
        pm1 = pk;
    }
    return pm1;
}

namespace {

struct Exponents {
    double u;  // power of s
    double v;  // sqrt(1/4 - delta + gamma - eta - beta)
};

Exponents bound_exponents(const PotentialParams& p, const PhysicalContext& ctx,
                          const QuantumNumbers& qn, const ApproximationScheme& scheme) {
    const SpectrumRecord rec = energy_level(p, ctx, qn, scheme);
    if (!rec.validity.valid)
        throw InvalidStateError("radial wavefunction requested for a non-valid bound state");
    const DimensionlessParams d = to_dimensionless(p, ctx, qn.l, scheme.c0);
    const double radicand = 0.25 - d.delta + d.gamma - d.eta - d.beta;
    return {rec.s_exponent, std::sqrt(radicand)};
}

double radial_value(const PotentialParams& p, const QuantumNumbers& qn,
                    const Exponents& e, double r) {
    if (!(r > 0.0)) throw std::domain_error("radial value: r must be > 0");
    const double s = std::exp(-2.0 * p.alpha * r);
    const JacobiParams jp{qn.n, 2.0 * e.u, 2.0 * e.v};
    return std::pow(s, e.u) * std::pow(1.0 - s, 0.5 + e.v) * jacobi_p(jp, 1.0 - 2.0 * s);
}

}  // namespace

double radial_unnormalized(const PotentialParams& p, const PhysicalContext& ctx,
                           const QuantumNumbers& qn, const ApproximationScheme& scheme,
                           double r) {
    return radial_value(p, qn, bound_exponents(p, ctx, qn, scheme), r);
}

RadialFunctionTable sample_radial(const PotentialParams& p, const PhysicalContext& ctx,
                                  const QuantumNumbers& qn, const ApproximationScheme& scheme,
                                  const std::vector<double>& grid) {
    const Exponents e = bound_exponents(p, ctx, qn, scheme);
    RadialFunctionTable table;
    table.qn = qn;
    table.scheme = scheme;
    table.grid = grid;
    table.values.reserve(grid.size());
    for (double r : grid) table.values.push_back(radial_value(p, qn, e, r));
    table.node_count = count_nodes(table);
    return table;
}

RadialFunctionTable make_radial_table(const PotentialParams& p, const PhysicalContext& ctx,
                                      const QuantumNumbers& qn,
                                      const ApproximationScheme& scheme, int points) {
    if (points < 2) throw std::invalid_argument("make_radial_table: points must be >= 2");
    const Exponents e = bound_exponents(p, ctx, qn, scheme);
    const double two_a = 2.0 * p.alpha;
    const double r_min = 1e-4 / two_a;
    const double r_max = 40.0 / two_a * std::max(1.0, 1.0 / e.u);
    std::vector<double> grid(points);
    const double h = (r_max - r_min) / (points - 1);
    for (int i = 0; i < points; ++i) grid[i] = r_min + i * h;
    return sample_radial(p, ctx, qn, scheme, grid);
}

RadialFunctionTable normalize_radial(const RadialFunctionTable& table) {
    const auto& r = table.grid;
    const auto& y = table.values;
    if (r.size() < 2 || r.size() != y.size())
        throw std::invalid_argument("normalize_radial: malformed table");

    double max_abs = 0.0;
    for (double v : y) max_abs = std::max(max_abs, std::abs(v));
    if (max_abs == 0.0) throw ZeroNormError("normalize_radial: all samples are zero");
    // The grid must cover the support; reject visibly truncated tails.
    if (std::abs(y.back()) > 1e-5 * max_abs || std::abs(y.front()) > 1e-2 * max_abs)
        throw std::domain_error("normalize_radial: grid does not cover the support");

    double integral = 0.0;
    for (std::size_t i = 1; i < r.size(); ++i)
        integral += 0.5 * (y[i] * y[i] + y[i - 1] * y[i - 1]) * (r[i] - r[i - 1]);
    if (!(integral > 0.0) || !std::isfinite(integral))
        throw ZeroNormError("normalize_radial: norm integral underflowed");

    double scale = 1.0 / std::sqrt(integral);
    // Sign convention: first interior lobe positive.
    for (double v : y) {
        if (std::abs(v) > 1e-12 * max_abs) {
            if (v < 0.0) scale = -scale;
            break;
        }
    }

    RadialFunctionTable out = table;
    out.norm_constant = table.norm_constant * scale;
    for (double& v : out.values) v *= scale;
    out.node_count = count_nodes(out);
    return out;
}

int count_nodes(const RadialFunctionTable& table) {
    double max_abs = 0.0;
    for (double v : table.values) max_abs = std::max(max_abs, std::abs(v));
    if (max_abs == 0.0) return 0;
    const double floor = 1e-12 * max_abs;

    int nodes = 0;
    int prev_sign = 0;
    for (double v : table.values) {
        if (std::abs(v) < floor) continue;
        const int sign = v > 0.0 ? 1 : -1;
        if (prev_sign != 0 && sign != prev_sign) ++nodes;
        prev_sign = sign;
    }
    return nodes;
}

}  // namespace mmsp
