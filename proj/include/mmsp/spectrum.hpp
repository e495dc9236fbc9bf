#pragma once

#include <optional>
#include <vector>

#include "mmsp/model.hpp"

namespace mmsp {

struct QuantumNumbers {
    int n = 0;  // radial
    int l = 0;  // orbital

    void validate() const;
};

struct ValidityFlags {
    bool valid = false;
    bool non_normalizable = false;
    bool supercritical = false;
    bool above_threshold = false;
};

/// One closed-form energy level.  s_exponent is the *signed* exponent
/// (eta - beta - chi^2) / (2 chi); its square equals eps_n - eta + gamma*c0_eff,
/// and the state is normalizable only when it is positive.
struct SpectrumRecord {
    QuantumNumbers qn;
    ApproximationScheme scheme;
    double energy = 0.0;
    double chi = 0.0;
    double s_exponent = 0.0;
    ValidityFlags validity;
};

/// chi = n + 1/2 + sqrt(1/4 - delta + gamma - eta - beta).
/// Throws SupercriticalError when the radicand is negative.
double chi_value(const DimensionlessParams& d, int n);

SpectrumRecord energy_level(const PotentialParams& p, const PhysicalContext& ctx,
                            const QuantumNumbers& qn, const ApproximationScheme& scheme);

ValidityFlags bound_state_validity(const SpectrumRecord& rec, const PotentialParams& p,
                                   const PhysicalContext& ctx);

struct SpectrumEnumeration {
    std::vector<SpectrumRecord> records;
    std::optional<int> n_max;  // largest n on the monotonic valid ladder
};

/// Records for n = 0..n_limit.  Records past n_max keep their flags but
/// are marked not valid (spurious branch of the closed form).
SpectrumEnumeration enumerate_spectrum(const PotentialParams& p, const PhysicalContext& ctx,
                                       int l, const ApproximationScheme& scheme, int n_limit);

}  // namespace mmsp
