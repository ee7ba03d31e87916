#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace snls {

using cplx = std::complex<double>;

/// Periodic uniform grid truncating R^d to the box [-L, L)^d.
///
/// Sample points per axis are x_i = -L + i * (2L/N) and the discrete
/// wavenumbers are k_m = (pi/L) * m with integer m in [-N/2, N/2).
/// Spectral arrays use the usual FFT layout (index i <-> m = i for
/// i < N/2, m = i - N otherwise).
class GridSpec {
public:
    GridSpec() = default;
    GridSpec(int dimension, int points_per_axis, double half_length);

    int dim() const { return d_; }
    int n() const { return n_; }
    double half_length() const { return l_; }
    std::size_t size() const { return size_; }

    double spacing() const { return 2.0 * l_ / n_; }
    double mode_spacing() const { return kPi / l_; }
    double cell_volume() const { return cell_volume_; }
    /// Spectral cell weight (mode_spacing / 2 pi)^d; with this weight the
    /// discrete spectral l2 sum matches the physical L2 quadrature (Parseval).
    double spectral_weight() const { return spectral_weight_; }

    double coord(int i) const { return x_[static_cast<std::size_t>(i)]; }
    double wavenumber(int i) const { return k_[static_cast<std::size_t>(i)]; }
    int mode_integer(int i) const { return i < n_ / 2 ? i : i - n_; }

    void decode(std::size_t flat, std::array<int, 3>& idx) const {
        for (int a = d_ - 1; a >= 0; --a) {
            idx[static_cast<std::size_t>(a)] = static_cast<int>(flat % static_cast<std::size_t>(n_));
            flat /= static_cast<std::size_t>(n_);
        }
    }

    /// |x|^2 at a flat row-major index.
    double radius2_at(std::size_t flat) const;
    /// |k|^2 at a flat spectral index (FFT layout).
    double k2_at(std::size_t flat) const;
    /// Wavenumber vector at a flat spectral index.
    std::array<double, 3> kvec_at(std::size_t flat) const;
    /// Parity (-1)^(sum of mode integers) at a flat spectral index.
    double mode_sign_at(std::size_t flat) const;
    /// True if the flat physical index lies on the boundary of the box
    /// (smallest or largest sample along some axis).
    bool on_boundary(std::size_t flat) const;

    bool operator==(const GridSpec& o) const {
        return d_ == o.d_ && n_ == o.n_ && l_ == o.l_;
    }

private:
    static constexpr double kPi = 3.141592653589793238462643383279502884;

    int d_ = 0;
    int n_ = 0;
    double l_ = 0.0;
    std::size_t size_ = 0;
    double cell_volume_ = 0.0;
    double spectral_weight_ = 0.0;
    std::vector<double> x_;
    std::vector<double> k_;
};

/// Complex-valued state sampled on a grid. Fields are immutable value
/// snapshots as far as the propagators and norms are concerned; nothing
/// in the library mutates a field it did not create.
struct Field {
    GridSpec grid;
    std::vector<cplx> a;

    Field() = default;
    explicit Field(const GridSpec& g) : grid(g), a(g.size(), cplx{0.0, 0.0}) {}
    Field(const GridSpec& g, std::vector<cplx> data);

    std::size_t size() const { return a.size(); }
    cplx& operator[](std::size_t i) { return a[i]; }
    const cplx& operator[](std::size_t i) const { return a[i]; }

    bool all_finite() const;
};

GridSpec make_grid(int dimension, int points_per_axis, double half_length);

/// L2 norm with cell-volume quadrature: (sum |f|^2 vol)^(1/2).
double l2_norm(const Field& f);
/// Squared L2 norm (cell-volume quadrature).
double mass(const Field& f);

Field operator+(const Field& f, const Field& g);
Field operator-(const Field& f, const Field& g);
Field operator*(cplx c, const Field& f);

/// || f - g ||_2 / || g ||_2.
double rel_l2_error(const Field& f, const Field& g);

}  // namespace snls
