#pragma once

#include <optional>
#include <vector>

namespace mmsp {

/// Modified Mobius Square potential
///   V(r) = -V0 * ((A + B e^{-2 a r}) / (1 - e^{-2 a r}))^2
struct PotentialParams {
    double v0 = 1.0;      // depth (energy units)
    double a_coef = 1.0;  // shape constant A (dimensionless)
    double b_coef = 0.0;  // shape constant B (dimensionless)
    double alpha = 1.0;   // screening parameter (inverse length, > 0)

    void validate() const;
};

struct PhysicalContext {
    double mu = 1.0;    // reduced mass
    double hbar = 1.0;  // reduced Planck constant

    void validate() const;
};

constexpr double kDefaultC0 = 1.0 / 12.0;

/// Centrifugal approximation scheme selector.  PekerisType carries the
/// offset constant C0; GreeneAldrich is the C0 = 0 specialization.
struct ApproximationScheme {
    enum class Kind { PekerisType, GreeneAldrich };

    Kind kind = Kind::GreeneAldrich;
    double c0 = kDefaultC0;  // only meaningful for PekerisType

    static ApproximationScheme pekeris(double c0 = kDefaultC0) {
        return {Kind::PekerisType, c0};
    }
    static ApproximationScheme greene_aldrich() {
        return {Kind::GreeneAldrich, 0.0};
    }

    // Effective offset entering the sigma-tilde coefficients and exponents.
    double c0_eff() const { return kind == Kind::PekerisType ? c0 : 0.0; }

    const char* name() const {
        return kind == Kind::PekerisType ? "pekeris" : "greene-aldrich";
    }
};

/// Dimensionless abbreviations of the radial problem.  eps_n is only set
/// once a (trial or final) energy is attached.
struct DimensionlessParams {
    std::optional<double> eps_n;  // -mu E / (2 hbar^2 alpha^2)
    double beta = 0.0;            // mu V0 B^2 / (2 hbar^2 alpha^2)
    double gamma = 0.0;           // l (l + 1)
    double delta = 0.0;           // mu V0 A B / (hbar^2 alpha^2)
    double eta = 0.0;             // mu V0 A^2 / (2 hbar^2 alpha^2)
    double c0 = kDefaultC0;       // Pekeris offset carried along
};

/// Potential value at radius r > 0.  Evaluated in the s = e^{-2 alpha r}
/// variable; tends to -V0 A^2 as r -> infinity.
double eval_potential(const PotentialParams& p, double r);

/// Dimensionless mapping for orbital number l; attaches eps_n when an
/// energy is supplied.
DimensionlessParams to_dimensionless(const PotentialParams& p, const PhysicalContext& ctx,
                                     int l, double c0,
                                     std::optional<double> energy = std::nullopt);

/// Approximate 1/r^2 under the given scheme.  GreeneAldrich:
/// 4 a^2 s/(1-s)^2; PekerisType adds the constant 4 a^2 C0.
double centrifugal_approx(const ApproximationScheme& scheme, double alpha, double r);

struct ApproxErrorRow {
    double r;
    double exact;      // 1 / r^2
    double approx;     // scheme value
    double rel_error;  // (approx - 1/r^2) * r^2
};

std::vector<ApproxErrorRow> approx_error_table(const ApproximationScheme& scheme,
                                               const PotentialParams& p,
                                               const std::vector<double>& r_grid);

}  // namespace mmsp
