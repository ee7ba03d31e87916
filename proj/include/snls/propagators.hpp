#pragma once

#include <functional>
#include <optional>

#include "snls/brownian.hpp"
#include "snls/grid.hpp"
#include "snls/potential.hpp"

namespace snls {

/// Physical parameters of one model configuration.
///
/// The equation family is  i u_t + Lap u = [nl] |u|^(p-1) u
///                                        + [noise] eps V u o dB/dt
///                                        + [damping] -i c_damp V^2 u
/// with c_damp = damp_scale * eps^2. damp_scale defaults to 1/2, the value
/// for which the damped propagator is consistent with the Ito form of the
/// noisy equation and the dissipation identity
///   int_0^t int eps^2 V^2 |u|^2 = ||u_0||^2 - ||u(t)||^2
/// holds. The coefficient stays configurable.
struct PhysicsParams {
    double epsilon = 0.0;
    double power = 7.0 / 3.0;  // defocusing exponent p; p-1 = 4/d is mass-critical
    Field potential;           // sampled V (real)
    double damp_scale = 0.5;
    bool nonlinearity_on = true;
    bool noise_on = true;
    bool damping_on = false;

    double c_damp() const { return damp_scale * epsilon * epsilon; }
    void validate() const;
};

/// Free propagator S(t) = exp(it Lap): spectral phase exp(-i|k|^2 t).
/// Unitary on L2; t may be negative (group inverse).
Field free_evolve(const Field& f, double t);

/// Damped propagator H(t) solving i v_t + Lap v = -i c_damp V^2 v,
/// realized by Strang splitting of the exact free substep and the exact
/// pointwise decay exp(-c_damp V^2 dt). Dissipative; reduces to S(t) when
/// epsilon = 0; second-order accurate in t/n_substeps.
Field damped_evolve(const Field& f, double t, const PhysicsParams& par, int n_substeps);

/// Exact flow of i u_t = |u|^(p-1) u over dt: pointwise unimodular phase.
Field nonlinear_phase_step(const Field& f, double dt, double p);

/// Exact Stratonovich sub-flow of eps V u o dB: u <- exp(-i eps V dB) u.
Field noise_phase_step(const Field& f, double dB, double eps, const Field& potential);

/// Strang split-step for the Stratonovich equation (and its damped variant):
/// free(dt/2) -> nonlinear(dt) -> noise(dB) [-> decay(dt)] -> free(dt/2).
/// Every substep is an L2 isometry when damping is off, so mass is conserved
/// pathwise up to roundoff. Tables are cached for a fixed dt.
class StrangStepper {
public:
    StrangStepper(const GridSpec& grid, const PhysicsParams& par, double dt);

    void step(Field& u, double dB) const;
    double dt() const { return dt_; }
    const PhysicsParams& params() const { return par_; }

private:
    GridSpec grid_;
    PhysicsParams par_;
    double dt_;
    std::vector<cplx> half_phase_;  // exp(-i|k|^2 dt/2)
    std::vector<double> decay_;     // exp(-c_damp V^2 dt), only if damping_on
};

/// H(t) applied by repeated Strang substeps of a fixed size. Substep
/// composition is exact (whole substeps form a semigroup), which the
/// maximal-functional machinery relies on.
class DampedPropagator {
public:
    DampedPropagator(const GridSpec& grid, const PhysicsParams& par, double dt_sub);

    void apply_substeps(Field& u, long n) const;
    Field at_time(const Field& u0, double t) const;  // t must be a multiple of dt_sub
    double dt_sub() const { return dt_; }

private:
    GridSpec grid_;
    double dt_;
    std::vector<cplx> half_phase_;
    std::vector<cplx> full_phase_;
    std::vector<double> decay_;
};

/// Explicit Euler-Maruyama step for the Ito form
///   du = [i Lap u - i|u|^(p-1)u - c_damp V^2 u] dt - i eps V u dB,
/// with the noise evaluated at the left endpoint. First-order reference
/// scheme; mass is NOT exactly conserved (the O(dt) drift is a test target).
/// Requires dt * |k_max|^2 <= stability_limit.
Field ito_euler_step(const Field& f, double dt, double dB, const PhysicsParams& par,
                     double stability_limit = 0.5);

/// Time-stamped snapshots of one realization.
struct Trajectory {
    GridSpec grid;
    std::vector<double> times;
    std::vector<Field> states;
    std::vector<double> mass_log;  // ||u||_2 per snapshot
    PhysicsParams params;
    std::uint64_t master_seed = 0;
    std::uint64_t path_index = 0;

    std::size_t snapshots() const { return times.size(); }
    const Field& state(std::size_t i) const { return states[i]; }
};

/// Called before each step with the left-endpoint state and the increment
/// that is about to be consumed.
using StepObserver =
    std::function<void(long step, double t_left, const Field& u_left, double dB)>;

/// March u0 with the Strang stepper at the path's dt, snapshotting at the
/// schedule times. Schedule times must be whole multiples of dt and the path
/// must cover the last of them.
Trajectory evolve_path(const Field& u0, const BrownianPath& path,
                       const std::vector<double>& schedule, const PhysicsParams& par,
                       const StepObserver& observe = {});

/// Uniform schedule 0, T/n, ..., T.
std::vector<double> uniform_schedule(double horizon, std::size_t n_snapshots);

}  // namespace snls
