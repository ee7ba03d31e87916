#pragma once

#include <limits>
#include <span>
#include <string>

#include "snls/grid.hpp"
#include "snls/propagators.hpp"

namespace snls {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Dual exponent: 1/q + 1/q' = 1. dual(1) = inf, dual(inf) = 1.
double dual_exponent(double q);

/// Strichartz exponent bundle for dimension d:
///   2/alpha + d/beta = d/2,   s_alpha = 1/alpha,   d/beta_tilde = d/2 - 1/alpha
/// (beta_tilde is the Sobolev-embedding partner of beta at regularity
/// s_alpha). Regime flags follow the d=3 conventions: `paper_main` for
/// alpha in [7/3, 4), `endpoint` for (alpha, beta) = (2, 6).
struct AdmissiblePair {
    int dim = 3;
    double alpha = 0.0;
    double beta = 0.0;
    double s_alpha = 0.0;
    double beta_tilde = 0.0;
    double beta_dual = 0.0;
    double beta_tilde_dual = 0.0;
    bool endpoint = false;
    bool paper_main = false;
};

/// Build the bundle. alpha > 2 required except the flagged endpoint
/// alpha = 2; alpha = inf maps to beta = 2 (mass conservation pair).
AdmissiblePair admissible_pair(double alpha, int dim = 3);

/// Norm descriptor.
///   lebesgue:  ||f||_{L^p}
///   sobolev:   ||<grad>^s f||_{L^p}                (Bessel potential)
///   weighted:  ||<grad>^s (<x>^-w f)||_{L^p}       (the X / Z / W family)
///   xx:        ||f||_{L^beta} + X^{s_alpha, beta_tilde'} with weight w
struct NormSpec {
    enum class Kind { lebesgue, sobolev, weighted, xx };
    Kind kind = Kind::lebesgue;
    double p = 2.0;
    double s = 0.0;
    double w = 0.0;
    double beta = 0.0;  // xx only

    static NormSpec lebesgue(double p);
    static NormSpec sobolev(double s, double p);
    /// X norm of the pair: ||<x>^-w f||_{W^{s_alpha, beta_tilde'}}.
    static NormSpec x_norm(const AdmissiblePair& pair, double w = 100.0);
    static NormSpec x_norm(double s, double q, double w);
    /// XX = L^beta + X.
    static NormSpec xx_norm(const AdmissiblePair& pair, double w = 100.0);
    /// Z = ||<x>^-w f||_{H^(1/2)}, default w = 10.
    static NormSpec z_norm(double w = 10.0);
    /// W = ||<x>^-w f||_{L^2}, default w = 100.
    static NormSpec w_norm(double w = 100.0);

    std::string label() const;
};

/// Cell-volume-weighted spatial norm (grid max for p = inf).
double spatial_norm(const Field& f, const NormSpec& spec);

/// Plain L^p helper.
double lp_norm(const Field& f, double p);

/// (int ||.||^alpha dt)^(1/alpha) with trapezoidal weights on the snapshot
/// grid; values[j] is the spatial norm at times[j]. alpha = inf gives the
/// max. Needs at least two snapshots.
double time_mixed_norm(std::span<const double> times, std::span<const double> values,
                       double alpha);

/// Spatial norms along a trajectory.
std::vector<double> norm_profile(const Trajectory& traj, const NormSpec& spec);

/// Trajectory convenience overload of time_mixed_norm.
double time_mixed_norm(const Trajectory& traj, double alpha, const NormSpec& spec);

struct OmegaNorm {
    double value = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    double std_error = 0.0;
};

/// Empirical (n^-1 sum x_i^alpha)^(1/alpha) with a bootstrap 95% CI
/// (percentile method, resampling seeded deterministically).
OmegaNorm omega_mixed_norm(std::span<const double> samples, double alpha,
                           int bootstrap = 1000, std::uint64_t seed = 0x5eed);

}  // namespace snls
