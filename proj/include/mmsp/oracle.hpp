#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mmsp/model.hpp"

namespace mmsp {

struct RadialGridSpec {
    double r_min = 0.0;
    double r_max = 0.0;
    int points = 0;  // total nodes including both Dirichlet endpoints

    void validate() const;
    double spacing() const { return (r_max - r_min) / (points - 1); }

    /// r_min = 1e-4/(2a), r_max = 40/(2a), points = 4000.
    static RadialGridSpec default_for(const PotentialParams& p);
};

/// Symmetric tridiagonal matrix (interior points of the FD discretization).
struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> off;  // size diag.size() - 1
};

/// Discretize -hbar^2/(2 mu) d^2/dr^2 + V_eff(r) with Dirichlet conditions
/// at r_min and r_max.  V_eff must include any centrifugal contribution.
Tridiagonal build_hamiltonian(const std::function<double(double)>& v_eff,
                              const PhysicalContext& ctx, const RadialGridSpec& grid);

/// MMSP Hamiltonian with the EXACT centrifugal term hbar^2 l(l+1)/(2 mu r^2).
Tridiagonal build_radial_hamiltonian(const PotentialParams& p, const PhysicalContext& ctx,
                                     int l, const RadialGridSpec& grid);

/// k smallest eigenvalues by Sturm-sequence bisection.
std::vector<double> lowest_eigenvalues(const Tridiagonal& t, int k);

/// Normalized eigenvector for a converged eigenvalue (inverse iteration).
std::vector<double> eigenvector(const Tridiagonal& t, double eigenvalue);

struct OracleResult {
    std::vector<double> energies;             // fine-grid values below the continuum edge
    std::vector<double> richardson_estimate;  // order-h^2 extrapolation
    std::vector<double> convergence_gap;      // |E(h) - E(h/2)| per level
    std::vector<std::vector<double>> eigenvectors;  // fine-grid interior samples, normalized
    RadialGridSpec fine_grid;
};

/// Solves on `grid` and on the half-spacing refinement; bound levels are
/// those below V(infinity) = -V0 A^2.
OracleResult oracle_solve(const PotentialParams& p, const PhysicalContext& ctx, int l,
                          const RadialGridSpec& grid, int k, bool want_vectors = false);

}  // namespace mmsp
