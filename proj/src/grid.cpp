#include "snls/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "snls/util.hpp"

namespace snls {

namespace {
bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

GridSpec::GridSpec(int dimension, int points_per_axis, double half_length)
    : d_(dimension), n_(points_per_axis), l_(half_length) {
    if (d_ < 1 || d_ > 3)
        throw std::invalid_argument("GridSpec: dimension must be 1, 2 or 3");
    if (!power_of_two(n_) || n_ < 8)
        throw std::invalid_argument("GridSpec: points per axis must be a power of two >= 8");
    if (!(l_ > 0.0))
        throw std::invalid_argument("GridSpec: half-length must be positive");

    size_ = 1;
    for (int a = 0; a < d_; ++a) size_ *= static_cast<std::size_t>(n_);

    const double h = spacing();
    cell_volume_ = std::pow(h, d_);
    spectral_weight_ = std::pow(mode_spacing() / (2.0 * kPi), d_);

    x_.resize(static_cast<std::size_t>(n_));
    k_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        x_[static_cast<std::size_t>(i)] = -l_ + h * i;
        k_[static_cast<std::size_t>(i)] = mode_spacing() * mode_integer(i);
    }
}

double GridSpec::radius2_at(std::size_t flat) const {
    std::array<int, 3> idx{};
    decode(flat, idx);
    double r2 = 0.0;
    for (int a = 0; a < d_; ++a) r2 += sq(coord(idx[static_cast<std::size_t>(a)]));
    return r2;
}

double GridSpec::k2_at(std::size_t flat) const {
    std::array<int, 3> idx{};
    decode(flat, idx);
    double k2 = 0.0;
    for (int a = 0; a < d_; ++a) k2 += sq(wavenumber(idx[static_cast<std::size_t>(a)]));
    return k2;
}

std::array<double, 3> GridSpec::kvec_at(std::size_t flat) const {
    std::array<int, 3> idx{};
    decode(flat, idx);
    std::array<double, 3> k{0.0, 0.0, 0.0};
    for (int a = 0; a < d_; ++a) k[static_cast<std::size_t>(a)] = wavenumber(idx[static_cast<std::size_t>(a)]);
    return k;
}

double GridSpec::mode_sign_at(std::size_t flat) const {
    std::array<int, 3> idx{};
    decode(flat, idx);
    int m = 0;
    for (int a = 0; a < d_; ++a) m += mode_integer(idx[static_cast<std::size_t>(a)]);
    return (m & 1) ? -1.0 : 1.0;
}

bool GridSpec::on_boundary(std::size_t flat) const {
    std::array<int, 3> idx{};
    decode(flat, idx);
    for (int a = 0; a < d_; ++a) {
        int i = idx[static_cast<std::size_t>(a)];
        if (i == 0 || i == n_ - 1) return true;
    }
    return false;
}

Field::Field(const GridSpec& g, std::vector<cplx> data) : grid(g), a(std::move(data)) {
    if (a.size() != g.size())
        throw std::invalid_argument("Field: data length does not match grid");
}

bool Field::all_finite() const {
    for (const cplx& z : a)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

GridSpec make_grid(int dimension, int points_per_axis, double half_length) {
    return GridSpec(dimension, points_per_axis, half_length);
}

double mass(const Field& f) {
    std::vector<double> terms(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) terms[i] = std::norm(f[i]);
    return pairwise_sum(terms) * f.grid.cell_volume();
}

double l2_norm(const Field& f) { return std::sqrt(mass(f)); }

Field operator+(const Field& f, const Field& g) {
    if (!(f.grid == g.grid)) throw std::invalid_argument("field +: grid mismatch");
    Field out(f.grid);
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] + g[i];
    return out;
}

Field operator-(const Field& f, const Field& g) {
    if (!(f.grid == g.grid)) throw std::invalid_argument("field -: grid mismatch");
    Field out(f.grid);
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] - g[i];
    return out;
}

Field operator*(cplx c, const Field& f) {
    Field out(f.grid);
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = c * f[i];
    return out;
}

double rel_l2_error(const Field& f, const Field& g) {
    double ref = l2_norm(g);
    if (ref == 0.0) return l2_norm(f);
    return l2_norm(f - g) / ref;
}

}  // namespace snls
