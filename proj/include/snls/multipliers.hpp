#pragma once

#include <functional>

#include "snls/grid.hpp"

namespace snls {

/// Scalar spectral symbol: receives the wavenumber vector (first dim()
/// entries valid) and |k|^2.
using Symbol = std::function<cplx(const std::array<double, 3>& k, double k2)>;

/// Precomputed Fourier-multiplier table in FFT layout.
struct MultiplierTable {
    GridSpec grid;
    std::vector<cplx> m;
};

MultiplierTable make_multiplier(const GridSpec& grid, const Symbol& symbol);

/// Bessel potential symbol (1+|k|^2)^(s/2).
MultiplierTable make_bessel(const GridSpec& grid, double s);
/// Riesz symbol |k|^s with the zero mode mapped to 0.
MultiplierTable make_riesz(const GridSpec& grid, double s);
/// Free Schroedinger phase exp(-i |k|^2 t) for i u_t + Lap u = 0.
MultiplierTable make_free_phase(const GridSpec& grid, double t);
/// Gradient component i k_axis.
MultiplierTable make_gradient(const GridSpec& grid, int axis);

/// Pointwise multiplication in spectral space: ifft(m . fft(f)).
Field apply_multiplier(const Field& f, const MultiplierTable& table);
Field apply_multiplier(const Field& f, const Symbol& symbol);

/// Pointwise product with <x>^-w = (1+|x|^2)^(-w/2), w >= 0. Underflow to
/// subnormal/zero far from the origin is accepted.
Field apply_weight(const Field& f, double w);

/// Cached <x>^-w table for a grid (norm evaluations reuse these heavily).
const std::vector<double>& weight_table(const GridSpec& grid, double w);

}  // namespace snls
