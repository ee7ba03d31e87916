#pragma once

#include "snls/grid.hpp"
#include "snls/propagators.hpp"

namespace snls {

/// Small-scale ground truth for the damped linear flow: the dense generator
///   G = i Lap_spectral - c_damp diag(V^2)
/// exponentiated by scaling-and-squaring. Restricted to d=1, N <= 64.
struct DenseGenerator {
    GridSpec grid;
    std::vector<cplx> matrix;  // row-major N x N

    DenseGenerator(const GridSpec& grid, const PhysicsParams& par);

    /// || G + G* || / || G || (Frobenius); ~0 for the undamped generator.
    double skew_hermitian_defect() const;
    /// Largest real part over the spectrum; <= 0 up to roundoff
    /// (dissipativity).
    double max_eigenvalue_real_part() const;
};

/// exp(G t) u0 via dense matrix exponential. Reference for damped_evolve.
Field dense_generator_evolve(const Field& u0, double t, const PhysicsParams& par);

/// Exact free evolution of the Gaussian e^{-a|x|^2}:
///   u(t) = (1+4iat)^{-d/2} exp(-a|x|^2 / (1+4iat)).
/// Throws if the Gaussian is unresolved or does not decay on the box.
Field gaussian_closed_form(const GridSpec& grid, double t, double a);

enum class SchemePair {
    strang_self,    // Strang vs dt/16 Strang reference, deterministic order 2
    ito_vs_strang,  // Euler-Maruyama vs Strang under shared paths, strong order
    identical,      // degenerate: same scheme twice, zero error
};

struct RateReport {
    std::vector<double> dts;
    std::vector<double> mean_errors;            // over seeds, per level
    std::vector<double> mean_mass_drift;        // |relative Ito mass drift|, per level
    std::vector<std::vector<double>> per_seed;  // per-seed error curves
    std::vector<double> per_seed_slopes;
    double slope = 0.0;
    bool degenerate = false;  // all errors zero; slope meaningless
};

struct ConvergenceConfig {
    GridSpec grid;
    Field u0;
    PhysicsParams params;
    double horizon = 1.0;
    double dt_coarse = 1.0 / 32.0;
    int levels = 4;
    int seeds = 8;
    std::uint64_t master_seed = 2024;
};

/// Least-squares slope of log error vs log dt over dyadic refinements with
/// coarse paths derived from the finest by summation (shared-path protocol).
RateReport convergence_study(SchemePair pair, const ConvergenceConfig& cfg);

}  // namespace snls
