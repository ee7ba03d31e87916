#include "snls/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "snls/brownian.hpp"
#include "snls/multipliers.hpp"
#include "snls/util.hpp"

namespace snls {

double dual_exponent(double q) {
    if (q == kInf) return 1.0;
    if (q == 1.0) return kInf;
    if (!(q > 1.0)) throw std::invalid_argument("dual_exponent: q must be in [1, inf]");
    return q / (q - 1.0);
}

AdmissiblePair admissible_pair(double alpha, int dim) {
    if (dim < 1 || dim > 3) throw std::invalid_argument("admissible_pair: dim in {1,2,3}");
    AdmissiblePair p;
    p.dim = dim;
    p.alpha = alpha;
    const double d = static_cast<double>(dim);

    if (alpha == kInf) {
        p.beta = 2.0;
        p.s_alpha = 0.0;
        p.beta_tilde = 2.0;  // d/bt = d/2 - 0
    } else {
        if (alpha < 2.0) throw std::invalid_argument("admissible_pair: alpha below endpoint");
        if (alpha == 2.0 && dim != 3)
            throw std::invalid_argument("admissible_pair: alpha = 2 endpoint handled for d=3 only");
        if (alpha == 2.0) {
            p.endpoint = true;  // the (2,6) endpoint, flagged but constructible
        }
        // 2/alpha + d/beta = d/2
        double inv_beta = (d / 2.0 - 2.0 / alpha) / d;
        if (inv_beta < 0.0)
            throw std::invalid_argument("admissible_pair: alpha too small for dimension");
        if (inv_beta == 0.0 && dim == 2)
            throw std::invalid_argument("admissible_pair: (2, inf) is forbidden in d=2");
        p.beta = inv_beta == 0.0 ? kInf : 1.0 / inv_beta;
        p.s_alpha = 1.0 / alpha;
        p.beta_tilde = d / (d / 2.0 - 1.0 / alpha);
    }
    p.beta_dual = dual_exponent(p.beta);
    p.beta_tilde_dual = dual_exponent(p.beta_tilde);
    if (dim == 3) {
        p.endpoint = (p.alpha == 2.0);
        p.paper_main = (p.alpha >= 7.0 / 3.0 && p.alpha < 4.0);
    }
    return p;
}

NormSpec NormSpec::lebesgue(double p) { return NormSpec{Kind::lebesgue, p, 0.0, 0.0, 0.0}; }

NormSpec NormSpec::sobolev(double s, double p) {
    return NormSpec{Kind::sobolev, p, s, 0.0, 0.0};
}

NormSpec NormSpec::x_norm(const AdmissiblePair& pair, double w) {
    return NormSpec{Kind::weighted, pair.beta_tilde_dual, pair.s_alpha, w, 0.0};
}

NormSpec NormSpec::x_norm(double s, double q, double w) {
    return NormSpec{Kind::weighted, q, s, w, 0.0};
}

NormSpec NormSpec::xx_norm(const AdmissiblePair& pair, double w) {
    return NormSpec{Kind::xx, pair.beta_tilde_dual, pair.s_alpha, w, pair.beta};
}

NormSpec NormSpec::z_norm(double w) { return NormSpec{Kind::weighted, 2.0, 0.5, w, 0.0}; }

NormSpec NormSpec::w_norm(double w) { return NormSpec{Kind::weighted, 2.0, 0.0, w, 0.0}; }

std::string NormSpec::label() const {
    switch (kind) {
        case Kind::lebesgue: return "L" + std::to_string(p);
        case Kind::sobolev: return "W" + std::to_string(s) + "," + std::to_string(p);
        case Kind::weighted:
            return "w" + std::to_string(w) + ":W" + std::to_string(s) + "," + std::to_string(p);
        case Kind::xx: return "XX";
    }
    return "?";
}

double lp_norm(const Field& f, double p) {
    if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
    if (p == kInf) {
        double m = 0.0;
        for (const cplx& z : f.a) m = std::max(m, std::abs(z));
        return m;
    }
    if (p == 2.0) return l2_norm(f);
    std::vector<double> terms(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        terms[i] = std::pow(std::abs(f[i]), p);
    return std::pow(pairwise_sum(terms) * f.grid.cell_volume(), 1.0 / p);
}

double spatial_norm(const Field& f, const NormSpec& spec) {
    if (!f.all_finite()) throw std::domain_error("spatial_norm: non-finite field");
    switch (spec.kind) {
        case NormSpec::Kind::lebesgue:
            return lp_norm(f, spec.p);
        case NormSpec::Kind::sobolev: {
            if (spec.s == 0.0) return lp_norm(f, spec.p);
            return lp_norm(apply_multiplier(f, make_bessel(f.grid, spec.s)), spec.p);
        }
        case NormSpec::Kind::weighted: {
            Field g = apply_weight(f, spec.w);
            if (spec.s == 0.0) return lp_norm(g, spec.p);
            return lp_norm(apply_multiplier(g, make_bessel(f.grid, spec.s)), spec.p);
        }
        case NormSpec::Kind::xx: {
            double part1 = lp_norm(f, spec.beta);
            Field g = apply_weight(f, spec.w);
            double part2 = spec.s == 0.0
                               ? lp_norm(g, spec.p)
                               : lp_norm(apply_multiplier(g, make_bessel(f.grid, spec.s)), spec.p);
            return part1 + part2;
        }
    }
    throw std::logic_error("spatial_norm: unreachable");
}

double time_mixed_norm(std::span<const double> times, std::span<const double> values,
                       double alpha) {
    if (times.size() != values.size())
        throw std::invalid_argument("time_mixed_norm: size mismatch");
    if (times.size() < 2)
        throw std::invalid_argument("time_mixed_norm: need at least two snapshots");
    if (alpha == kInf) {
        double m = 0.0;
        for (double v : values) m = std::max(m, v);
        return m;
    }
    if (alpha < 1.0) throw std::invalid_argument("time_mixed_norm: alpha must be >= 1");

    std::vector<double> terms(times.size(), 0.0);
    for (std::size_t j = 0; j < times.size(); ++j) {
        double w = 0.0;
        if (j > 0) w += 0.5 * (times[j] - times[j - 1]);
        if (j + 1 < times.size()) w += 0.5 * (times[j + 1] - times[j]);
        terms[j] = w * std::pow(values[j], alpha);
    }
    return std::pow(pairwise_sum(terms), 1.0 / alpha);
}

std::vector<double> norm_profile(const Trajectory& traj, const NormSpec& spec) {
    std::vector<double> out(traj.snapshots());
    for (std::size_t j = 0; j < traj.snapshots(); ++j)
        out[j] = spatial_norm(traj.states[j], spec);
    return out;
}

double time_mixed_norm(const Trajectory& traj, double alpha, const NormSpec& spec) {
    std::vector<double> vals = norm_profile(traj, spec);
    return time_mixed_norm(traj.times, vals, alpha);
}

OmegaNorm omega_mixed_norm(std::span<const double> samples, double alpha, int bootstrap,
                           std::uint64_t seed) {
    if (samples.empty()) throw std::invalid_argument("omega_mixed_norm: empty ensemble");
    if (!(alpha >= 1.0)) throw std::invalid_argument("omega_mixed_norm: alpha must be >= 1");

    auto moment = [alpha](std::span<const double> v) {
        std::vector<double> terms(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) terms[i] = std::pow(v[i], alpha);
        return std::pow(pairwise_sum(terms) / static_cast<double>(v.size()), 1.0 / alpha);
    };

    OmegaNorm out;
    out.value = moment(samples);

    const std::size_t n = samples.size();
    std::vector<double> stats(static_cast<std::size_t>(bootstrap));
    std::vector<double> resample(n);
    for (int b = 0; b < bootstrap; ++b) {
        for (std::size_t i = 0; i < n; ++i) {
            double u = uniform_deviate(seed, static_cast<std::uint64_t>(b), 7u,
                                       static_cast<std::uint64_t>(i));
            std::size_t pick = std::min(n - 1, static_cast<std::size_t>(u * static_cast<double>(n)));
            resample[i] = samples[pick];
        }
        stats[static_cast<std::size_t>(b)] = moment(resample);
    }
    out.ci_lo = quantile(stats, 0.025);
    out.ci_hi = quantile(stats, 0.975);
    double mb = pairwise_sum(stats) / static_cast<double>(stats.size());
    double var = 0.0;
    for (double s : stats) var += sq(s - mb);
    out.std_error = std::sqrt(var / static_cast<double>(stats.size()));
    return out;
}

}  // namespace snls
