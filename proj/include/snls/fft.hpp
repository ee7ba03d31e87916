#pragma once

#include "snls/grid.hpp"

namespace snls {

enum class Transform { forward, backward };

/// Discrete Fourier transform with continuum-style normalization.
///
/// forward:  fhat(k_m) = cell_volume * sum_j f(x_j) exp(-i k_m . x_j)
/// backward: f(x_j)    = spectral_weight * sum_m fhat(k_m) exp(+i k_m . x_j)
///
/// With these factors the forward transform approximates the Fourier
/// integral over R^d and Parseval holds between the cell-volume L2
/// quadrature and the spectral_weight-weighted l2 sum. Forward then
/// backward is the identity. Throws on non-finite input.
Field transform(const Field& f, Transform direction);

namespace detail {
/// Raw unnormalized FFT (FFTW convention, no phase or volume factors).
/// in and out must be distinct buffers of length grid.size().
void fft_raw(const GridSpec& grid, const cplx* in, cplx* out, Transform direction);
}  // namespace detail

}  // namespace snls
