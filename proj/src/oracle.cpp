#include "mmsp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mmsp/errors.hpp"

namespace mmsp {

void RadialGridSpec::validate() const {
    if (!(r_min > 0.0) || !(r_max > r_min))
        throw std::invalid_argument("grid: need 0 < r_min < r_max");
    if (points < 100) throw std::invalid_argument("grid: points must be >= 100");
}

RadialGridSpec RadialGridSpec::default_for(const PotentialParams& p) {
    const double two_a = 2.0 * p.alpha;
    return {1e-4 / two_a, 40.0 / two_a, 4000};
}

Tridiagonal build_hamiltonian(const std::function<double(double)>& v_eff,
                              const PhysicalContext& ctx, const RadialGridSpec& grid) {
    grid.validate();
    ctx.validate();
    const double h = grid.spacing();
    const double kin = ctx.hbar * ctx.hbar / (ctx.mu * h * h);
    const int n = grid.points - 2;  // interior nodes

    Tridiagonal t;
    t.diag.resize(n);
    t.off.assign(n - 1, -0.5 * kin);
    for (int i = 0; i < n; ++i) {
        const double r = grid.r_min + (i + 1) * h;
        t.diag[i] = kin + v_eff(r);
    }
    return t;
}

Tridiagonal build_radial_hamiltonian(const PotentialParams& p, const PhysicalContext& ctx,
                                     int l, const RadialGridSpec& grid) {
    p.validate();
    if (l < 0) throw std::invalid_argument("l must be >= 0");
    const double cent = ctx.hbar * ctx.hbar * l * (l + 1) / (2.0 * ctx.mu);
    return build_hamiltonian(
        [&](double r) { return eval_potential(p, r) + cent / (r * r); }, ctx, grid);
}

namespace {

// Number of eigenvalues strictly below x (Sturm count via the LDL^T recurrence).
int sturm_count(const Tridiagonal& t, double x) {
    const std::size_t n = t.diag.size();
    int count = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double off2 = i == 0 ? 0.0 : t.off[i - 1] * t.off[i - 1];
        d = t.diag[i] - x - off2 / d;
        if (d == 0.0) d = -std::numeric_limits<double>::min();
        if (d < 0.0) ++count;
    }
    return count;
}

}  // namespace

std::vector<double> lowest_eigenvalues(const Tridiagonal& t, int k) {
    const int n = static_cast<int>(t.diag.size());
    if (k < 1 || k > n)
        throw std::invalid_argument("lowest_eigenvalues: k out of range");

    // Gershgorin bounds
    double lo = t.diag[0], hi = t.diag[0];
    for (int i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(t.off[i - 1]);
        if (i + 1 < n) radius += std::abs(t.off[i]);
        lo = std::min(lo, t.diag[i] - radius);
        hi = std::max(hi, t.diag[i] + radius);
    }

    std::vector<double> out;
    out.reserve(k);
    double lower = lo;
    for (int j = 1; j <= k; ++j) {
        double a = lower, b = hi;
        while (true) {
            const double scale = std::max(std::abs(a), std::abs(b));
            const double tol = std::max(1e-12, 4.0 * scale * 2.22e-16);
            if (b - a <= tol) break;
            const double mid = 0.5 * (a + b);
            if (sturm_count(t, mid) >= j)
                b = mid;
            else
                a = mid;
        }
        out.push_back(0.5 * (a + b));
        lower = a;  // next eigenvalue cannot be below this one
    }
    return out;
}

std::vector<double> eigenvector(const Tridiagonal& t, double eigenvalue) {
    const int n = static_cast<int>(t.diag.size());
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));

    // A few rounds of inverse iteration with a partially pivoted
    // tridiagonal solve; deterministic start vector.
    for (int iter = 0; iter < 3; ++iter) {
        // Solve (T - lambda I) y = x, Gaussian elimination with row swaps.
        std::vector<double> d(n), u1(std::max(n - 1, 0)), u2(std::max(n - 2, 0), 0.0);
        std::vector<double> rhs = x;
        for (int i = 0; i < n; ++i) d[i] = t.diag[i] - eigenvalue;
        for (int i = 0; i + 1 < n; ++i) u1[i] = t.off[i];

        for (int i = 0; i + 1 < n; ++i) {
            double sub = t.off[i];  // element below the pivot
            if (std::abs(sub) > std::abs(d[i])) {
                std::swap(d[i], sub);
                const double tmp = u1[i];
                u1[i] = d[i + 1];
                d[i + 1] = tmp;
                if (i + 2 < n) {
                    u2[i] = u1[i + 1];
                    u1[i + 1] = 0.0;
                }
                std::swap(rhs[i], rhs[i + 1]);
            }
            if (d[i] == 0.0) d[i] = 1e-300;
            const double m = sub / d[i];
            d[i + 1] -= m * u1[i];
            if (i + 2 < n) u1[i + 1] -= m * u2[i];
            rhs[i + 1] -= m * rhs[i];
        }
        if (d[n - 1] == 0.0) d[n - 1] = 1e-300;

        std::vector<double> y(n);
        for (int i = n - 1; i >= 0; --i) {
            double acc = rhs[i];
            if (i + 1 < n) acc -= u1[i] * y[i + 1];
            if (i + 2 < n) acc -= u2[i] * y[i + 2];
            y[i] = acc / d[i];
        }
        double norm = 0.0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw std::runtime_error("eigenvector: inverse iteration broke down");
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
    }
    // Fixed overall sign: largest-magnitude component positive.
    double best = 0.0;
    for (double v : x)
        if (std::abs(v) > std::abs(best)) best = v;
    if (best < 0.0)
        for (double& v : x) v = -v;
    return x;
}

OracleResult oracle_solve(const PotentialParams& p, const PhysicalContext& ctx, int l,
                          const RadialGridSpec& grid, int k, bool want_vectors) {
    grid.validate();
    if (k < 1 || k > grid.points / 4)
        throw std::invalid_argument("oracle_solve: k out of range (1 <= k <= points/4)");
    const RadialGridSpec fine{grid.r_min, grid.r_max, 2 * grid.points - 1};
    const double threshold = -p.v0 * p.a_coef * p.a_coef;

    const auto coarse_all = lowest_eigenvalues(build_radial_hamiltonian(p, ctx, l, grid), k);
    const auto fine_all = lowest_eigenvalues(build_radial_hamiltonian(p, ctx, l, fine), k);

    OracleResult res;
    res.fine_grid = fine;
    for (int i = 0; i < k; ++i) {
        if (!(fine_all[i] < threshold) || !(coarse_all[i] < threshold)) continue;
        res.energies.push_back(fine_all[i]);
        res.richardson_estimate.push_back((4.0 * fine_all[i] - coarse_all[i]) / 3.0);
        res.convergence_gap.push_back(std::abs(coarse_all[i] - fine_all[i]));
    }
    if (res.energies.empty())
        throw NoBoundLevelsError(
            "oracle_solve: no eigenvalue below the continuum edge -V0 A^2 (no binding)");

    if (want_vectors) {
        const Tridiagonal tf = build_radial_hamiltonian(p, ctx, l, fine);
        for (double e : res.energies) res.eigenvectors.push_back(eigenvector(tf, e));
    }
    return res;
}

}  // namespace mmsp
