#pragma once

#include <vector>

#include "mmsp/model.hpp"
#include "mmsp/spectrum.hpp"

namespace mmsp {

struct JacobiParams {
    int degree = 0;
    double alpha_idx = 0.0;  // upper index a > -1
    double beta_idx = 0.0;   // upper index b > -1
};

/// P_n^{(a,b)}(x) by forward three-term recurrence.
double jacobi_p(const JacobiParams& jp, double x);

struct RadialFunctionTable {
    QuantumNumbers qn;
    ApproximationScheme scheme;
    std::vector<double> grid;    // strictly increasing r values
    std::vector<double> values;  // R(r) samples
    double norm_constant = 1.0;  // multiplier applied by normalize_radial
    int node_count = 0;
};

/// Unnormalized R(r) = s^u (1-s)^{1/2+v} P_n^{(2u,2v)}(1-2s), s = e^{-2 a r}.
/// Throws InvalidStateError unless the corresponding record is Valid.
double radial_unnormalized(const PotentialParams& p, const PhysicalContext& ctx,
                           const QuantumNumbers& qn, const ApproximationScheme& scheme,
                           double r);

/// Sample R on an explicit grid (unnormalized, node_count filled in).
RadialFunctionTable sample_radial(const PotentialParams& p, const PhysicalContext& ctx,
                                  const QuantumNumbers& qn, const ApproximationScheme& scheme,
                                  const std::vector<double>& grid);

/// Sample on the default adaptive grid: r in [1e-4/(2a), 40/(2a) * max(1, 1/u)].
RadialFunctionTable make_radial_table(const PotentialParams& p, const PhysicalContext& ctx,
                                      const QuantumNumbers& qn,
                                      const ApproximationScheme& scheme,
                                      int points = 10001);

/// Rescale so the trapezoidal integral of R^2 is 1; first interior lobe
/// positive.  Throws ZeroNormError if the integral underflows.
RadialFunctionTable normalize_radial(const RadialFunctionTable& table);

/// Strict sign changes among interior samples, ignoring magnitudes below
/// 1e-12 * max|R|.
int count_nodes(const RadialFunctionTable& table);

}  // namespace mmsp
