#include "snls/propagators.hpp"

#include <cmath>
#include <stdexcept>

#include "snls/fft.hpp"
#include "snls/multipliers.hpp"
#include "snls/util.hpp"

namespace snls {

namespace {

std::vector<cplx> free_phase_table(const GridSpec& g, double t) {
    std::vector<cplx> tab(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) tab[i] = std::polar(1.0, -g.k2_at(i) * t);
    return tab;
}

std::vector<double> decay_table(const GridSpec& g, const Field& pot, double c_damp, double dt) {
    std::vector<double> tab(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        tab[i] = std::exp(-c_damp * std::norm(pot[i]) * dt);
    return tab;
}

void apply_spectral_table(const GridSpec& g, Field& u, const std::vector<cplx>& tab) {
    Field spec(g);
    detail::fft_raw(g, u.a.data(), spec.a.data(), Transform::forward);
    for (std::size_t i = 0; i < g.size(); ++i) spec[i] *= tab[i];
    detail::fft_raw(g, spec.a.data(), u.a.data(), Transform::backward);
    const double inv = 1.0 / static_cast<double>(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) u[i] *= inv;
}

}  // namespace

void PhysicsParams::validate() const {
    if (epsilon < 0.0) throw std::invalid_argument("params: epsilon must be >= 0");
    if (power < 1.0) throw std::invalid_argument("params: power must be >= 1");
    for (const cplx& z : potential.a)
        if (z.imag() != 0.0) throw std::invalid_argument("params: potential must be real");
}

Field free_evolve(const Field& f, double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("free_evolve: non-finite time");
    Field out = f;
    apply_spectral_table(f.grid, out, free_phase_table(f.grid, t));
    return out;
}

Field damped_evolve(const Field& f, double t, const PhysicsParams& par, int n_substeps) {
    if (t < 0.0) throw std::invalid_argument("damped_evolve: negative time");
    if (n_substeps < 1) throw std::invalid_argument("damped_evolve: need >= 1 substeps");
    if (t == 0.0) return f;
    DampedPropagator h(f.grid, par, t / n_substeps);
    Field out = f;
    h.apply_substeps(out, n_substeps);
    return out;
}

Field nonlinear_phase_step(const Field& f, double dt, double p) {
    if (!std::isfinite(dt)) throw std::invalid_argument("nonlinear_phase: non-finite dt");
    if (p < 1.0) throw std::invalid_argument("nonlinear_phase: power must be >= 1");
    Field out(f.grid);
    const double ex = 0.5 * (p - 1.0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        double amp2 = std::norm(f[i]);
        out[i] = f[i] * std::polar(1.0, -std::pow(amp2, ex) * dt);
    }
    return out;
}

Field noise_phase_step(const Field& f, double dB, double eps, const Field& potential) {
    if (!std::isfinite(dB)) throw std::invalid_argument("noise_phase: non-finite increment");
    Field out(f.grid);
    for (std::size_t i = 0; i < f.size(); ++i)
        out[i] = f[i] * std::polar(1.0, -eps * potential[i].real() * dB);
    return out;
}

StrangStepper::StrangStepper(const GridSpec& grid, const PhysicsParams& par, double dt)
    : grid_(grid), par_(par), dt_(dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("stepper: dt must be positive");
    par_.validate();
    half_phase_ = free_phase_table(grid_, 0.5 * dt_);
    if (par_.damping_on)
        decay_ = decay_table(grid_, par_.potential, par_.c_damp(), dt_);
}

void StrangStepper::step(Field& u, double dB) const {
    apply_spectral_table(grid_, u, half_phase_);
    if (par_.nonlinearity_on) {
        const double ex = 0.5 * (par_.power - 1.0);
        for (std::size_t i = 0; i < u.size(); ++i)
            u[i] *= std::polar(1.0, -std::pow(std::norm(u[i]), ex) * dt_);
    }
    if (par_.noise_on && par_.epsilon != 0.0) {
        for (std::size_t i = 0; i < u.size(); ++i)
            u[i] *= std::polar(1.0, -par_.epsilon * par_.potential[i].real() * dB);
    }
    if (par_.damping_on) {
        for (std::size_t i = 0; i < u.size(); ++i) u[i] *= decay_[i];
    }
    apply_spectral_table(grid_, u, half_phase_);
}

DampedPropagator::DampedPropagator(const GridSpec& grid, const PhysicsParams& par,
                                   double dt_sub)
    : grid_(grid), dt_(dt_sub) {
    if (!(dt_sub > 0.0)) throw std::invalid_argument("damped propagator: dt must be positive");
    half_phase_ = free_phase_table(grid_, 0.5 * dt_);
    full_phase_ = free_phase_table(grid_, dt_);
    decay_ = decay_table(grid_, par.potential, par.c_damp(), dt_);
}

void DampedPropagator::apply_substeps(Field& u, long n) const {
    if (n <= 0) return;
    // Strang substeps with the interior half-phases merged:
    // F(dt/2) D [F(dt) D]^(n-1) F(dt/2).
    apply_spectral_table(grid_, u, half_phase_);
    for (std::size_t i = 0; i < u.size(); ++i) u[i] *= decay_[i];
    for (long s = 1; s < n; ++s) {
        apply_spectral_table(grid_, u, full_phase_);
        for (std::size_t i = 0; i < u.size(); ++i) u[i] *= decay_[i];
    }
    apply_spectral_table(grid_, u, half_phase_);
}

Field DampedPropagator::at_time(const Field& u0, double t) const {
    double n = t / dt_;
    long ni = std::lround(n);
    if (std::abs(n - static_cast<double>(ni)) > 1e-9 || ni < 0)
        throw std::invalid_argument("damped propagator: time not a multiple of substep");
    Field out = u0;
    apply_substeps(out, ni);
    return out;
}

Field ito_euler_step(const Field& f, double dt, double dB, const PhysicsParams& par,
                     double stability_limit) {
    if (!(dt > 0.0)) throw std::invalid_argument("ito_euler: dt must be positive");
    const GridSpec& g = f.grid;
    const double kmax = g.mode_spacing() * (g.n() / 2);
    if (dt * kmax * kmax * g.dim() > stability_limit)
        throw std::invalid_argument("ito_euler: dt |k_max|^2 exceeds stability limit");

    // Lap u via spectral multiplication.
    Field lap(g);
    detail::fft_raw(g, f.a.data(), lap.a.data(), Transform::forward);
    for (std::size_t i = 0; i < g.size(); ++i) lap[i] *= -g.k2_at(i);
    Field lap_phys(g);
    detail::fft_raw(g, lap.a.data(), lap_phys.a.data(), Transform::backward);
    const double inv = 1.0 / static_cast<double>(g.size());

    const double c = par.c_damp();
    const double ex = 0.5 * (par.power - 1.0);
    const cplx iu{0.0, 1.0};
    Field out(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        cplx drift = iu * (lap_phys[i] * inv);
        if (par.nonlinearity_on)
            drift -= iu * std::pow(std::norm(f[i]), ex) * f[i];
        double v = par.potential[i].real();
        if (par.noise_on) drift -= c * v * v * f[i];
        out[i] = f[i] + dt * drift;
        if (par.noise_on) out[i] -= iu * par.epsilon * v * f[i] * dB;
    }
    return out;
}

std::vector<double> uniform_schedule(double horizon, std::size_t n_snapshots) {
    if (horizon < 0.0) throw std::invalid_argument("schedule: negative horizon");
    std::vector<double> t;
    if (horizon == 0.0 || n_snapshots <= 1) {
        t.push_back(0.0);
        if (horizon > 0.0) t.push_back(horizon);
        return t;
    }
    for (std::size_t j = 0; j < n_snapshots; ++j)
        t.push_back(horizon * static_cast<double>(j) / static_cast<double>(n_snapshots - 1));
    return t;
}

Trajectory evolve_path(const Field& u0, const BrownianPath& path,
                       const std::vector<double>& schedule, const PhysicsParams& par,
                       const StepObserver& observe) {
    if (schedule.empty() || schedule.front() != 0.0)
        throw std::invalid_argument("evolve_path: schedule must start at 0");
    for (std::size_t j = 1; j < schedule.size(); ++j)
        if (!(schedule[j] > schedule[j - 1]))
            throw std::invalid_argument("evolve_path: schedule not strictly increasing");

    const double dt = path.dt;
    std::vector<long> snap_steps(schedule.size());
    for (std::size_t j = 0; j < schedule.size(); ++j) {
        double n = schedule[j] / dt;
        long ni = std::lround(n);
        if (std::abs(n - static_cast<double>(ni)) > 1e-9)
            throw std::invalid_argument("evolve_path: schedule time not a multiple of dt");
        snap_steps[j] = ni;
    }
    const long total = snap_steps.back();
    if (static_cast<std::size_t>(total) > path.steps())
        throw std::invalid_argument("evolve_path: path does not cover the schedule");

    Trajectory traj;
    traj.grid = u0.grid;
    traj.params = par;
    traj.master_seed = path.master_seed;
    traj.path_index = path.path_index;

    Field u = u0;
    std::size_t next_snap = 0;
    auto maybe_snapshot = [&](long step_idx) {
        while (next_snap < snap_steps.size() && snap_steps[next_snap] == step_idx) {
            traj.times.push_back(schedule[next_snap]);
            traj.states.push_back(u);
            traj.mass_log.push_back(l2_norm(u));
            ++next_snap;
        }
    };

    maybe_snapshot(0);
    if (total > 0) {
        StrangStepper stepper(u0.grid, par, dt);
        for (long s = 0; s < total; ++s) {
            double dB = path.increments[static_cast<std::size_t>(s)];
            if (observe) observe(s, dt * static_cast<double>(s), u, dB);
            stepper.step(u, dB);
            maybe_snapshot(s + 1);
        }
    }
    return traj;
}

}  // namespace snls
