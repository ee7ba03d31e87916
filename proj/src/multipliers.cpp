#include "snls/multipliers.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "snls/fft.hpp"

namespace snls {

MultiplierTable make_multiplier(const GridSpec& grid, const Symbol& symbol) {
    MultiplierTable t{grid, std::vector<cplx>(grid.size())};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        cplx v = symbol(grid.kvec_at(i), grid.k2_at(i));
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::domain_error("multiplier: symbol non-finite on grid spectrum");
        t.m[i] = v;
    }
    return t;
}

MultiplierTable make_bessel(const GridSpec& grid, double s) {
    return make_multiplier(grid, [s](const std::array<double, 3>&, double k2) {
        return cplx{std::pow(1.0 + k2, 0.5 * s), 0.0};
    });
}

MultiplierTable make_riesz(const GridSpec& grid, double s) {
    return make_multiplier(grid, [s](const std::array<double, 3>&, double k2) {
        if (k2 == 0.0) return cplx{0.0, 0.0};  // homogeneous symbol, zero mode dropped
        return cplx{std::pow(k2, 0.5 * s), 0.0};
    });
}

MultiplierTable make_free_phase(const GridSpec& grid, double t) {
    return make_multiplier(grid, [t](const std::array<double, 3>&, double k2) {
        return std::polar(1.0, -k2 * t);
    });
}

MultiplierTable make_gradient(const GridSpec& grid, int axis) {
    if (axis < 0 || axis >= grid.dim())
        throw std::invalid_argument("gradient: axis outside grid dimension");
    return make_multiplier(grid, [axis](const std::array<double, 3>& k, double) {
        return cplx{0.0, k[static_cast<std::size_t>(axis)]};
    });
}

Field apply_multiplier(const Field& f, const MultiplierTable& table) {
    if (!(f.grid == table.grid))
        throw std::invalid_argument("apply_multiplier: grid mismatch");
    if (!f.all_finite()) throw std::domain_error("apply_multiplier: non-finite input");

    const GridSpec& g = f.grid;
    Field spec(g), out(g);
    detail::fft_raw(g, f.a.data(), spec.a.data(), Transform::forward);
    for (std::size_t i = 0; i < g.size(); ++i) spec[i] *= table.m[i];
    detail::fft_raw(g, spec.a.data(), out.a.data(), Transform::backward);
    const double inv = 1.0 / static_cast<double>(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] *= inv;
    return out;
}

Field apply_multiplier(const Field& f, const Symbol& symbol) {
    return apply_multiplier(f, make_multiplier(f.grid, symbol));
}

Field apply_weight(const Field& f, double w) {
    if (w < 0.0) throw std::invalid_argument("apply_weight: w must be nonnegative");
    if (!f.all_finite()) throw std::domain_error("apply_weight: non-finite input");
    if (w == 0.0) return f;
    const std::vector<double>& tab = weight_table(f.grid, w);
    Field out(f.grid);
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] * tab[i];
    return out;
}

const std::vector<double>& weight_table(const GridSpec& grid, double w) {
    using Key = std::tuple<int, int, double, double>;
    static std::mutex mu;
    static std::map<Key, std::vector<double>> cache;

    std::scoped_lock lock(mu);
    Key key{grid.dim(), grid.n(), grid.half_length(), w};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<double> tab(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        tab[i] = std::pow(1.0 + grid.radius2_at(i), -0.5 * w);
    return cache.emplace(key, std::move(tab)).first->second;
}

}  // namespace snls
