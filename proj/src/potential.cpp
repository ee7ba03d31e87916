#include "snls/potential.hpp"

#include <cmath>
#include <stdexcept>

#include "snls/util.hpp"

namespace snls {

Field sample_potential(const PotentialSpec& spec, const GridSpec& grid) {
    if (!(spec.width > 0.0))
        throw std::invalid_argument("potential: width must be positive");

    Field v(grid);
    double peak = 0.0;
    double boundary_max = 0.0;
    std::array<int, 3> idx{};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        grid.decode(i, idx);
        double r2 = 0.0;
        for (int a = 0; a < grid.dim(); ++a)
            r2 += sq(grid.coord(idx[static_cast<std::size_t>(a)]) - spec.center[static_cast<std::size_t>(a)]);
        double val = spec.amplitude * std::exp(-r2 / (2.0 * sq(spec.width)));
        v[i] = cplx{val, 0.0};
        peak = std::max(peak, std::abs(val));
        if (grid.on_boundary(i)) boundary_max = std::max(boundary_max, std::abs(val));
    }

    if (peak > 0.0 && boundary_max > 1e-12 * peak)
        throw std::domain_error(
            "potential: fails boundary decay invariant (box too small for width)");
    return v;
}

}  // namespace snls
