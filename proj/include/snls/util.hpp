#pragma once

#include <cstdint>
#include <cstddef>
#include <cmath>
#include <span>
#include <string_view>
#include <vector>

namespace snls {

/// Pairwise (tree) summation. Deterministic for a fixed input order and
/// considerably more accurate than sequential accumulation on long inputs.
double pairwise_sum(std::span<const double> v);

/// Least-squares slope of y against x.
double ls_slope(std::span<const double> x, std::span<const double> y);

/// FNV-1a 64-bit hash of a byte string.
std::uint64_t fnv1a(std::string_view bytes);

/// Sample quantile (linear interpolation) of an unsorted copy of v.
double quantile(std::vector<double> v, double q);

inline double sq(double x) { return x * x; }

}  // namespace snls
