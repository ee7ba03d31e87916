#pragma once

#include <array>

#include "snls/grid.hpp"

namespace snls {

/// Smooth, rapidly decaying real potential profile. Only a Gaussian bump is
/// provided; the sampled field must decay below 1e-12 of its peak at the box
/// boundary (Schwartz-likeness on the truncated box).
struct PotentialSpec {
    enum class Kind { gaussian };
    Kind kind = Kind::gaussian;
    double amplitude = 1.0;
    double width = 1.0;  // sigma > 0
    std::array<double, 3> center{0.0, 0.0, 0.0};
};

/// Sample the potential on a grid. The imaginary parts are exactly zero.
/// Throws std::domain_error if the boundary-decay invariant fails
/// (box too small for the requested width).
Field sample_potential(const PotentialSpec& spec, const GridSpec& grid);

}  // namespace snls
