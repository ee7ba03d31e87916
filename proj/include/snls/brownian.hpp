#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace snls {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11 constants).
/// A (key, counter) pair maps to four 32-bit words; distinct counters give
/// statistically independent outputs, so per-path and per-level streams are
/// carved out of the counter space without any sequential state.
struct Philox4x32 {
    std::uint32_t key0, key1;

    struct Block {
        std::uint32_t w[4];
    };

    Block operator()(std::uint32_t c0, std::uint32_t c1, std::uint32_t c2,
                     std::uint32_t c3) const;
};

/// Standard normal deviate j of stream `stream` of path `path_index` under
/// `master_seed`. Gaussian sampling is Box-Muller, fixed per build
/// (rng scheme id "philox4x32-10/box-muller").
double normal_deviate(std::uint64_t master_seed, std::uint64_t path_index,
                      std::uint32_t stream, std::uint64_t j);

/// Uniform deviate in [0,1), same stream addressing as normal_deviate.
double uniform_deviate(std::uint64_t master_seed, std::uint64_t path_index,
                       std::uint32_t stream, std::uint64_t j);

/// One seeded realization of discrete Brownian increments.
///
/// Increments are the primary data; cumulative values are their prefix sums
/// (cumulative[0] = 0). A path produced by refine_brownian keeps a handle to
/// its parent so that coarsening it recovers the parent's increments
/// bit-exactly.
struct BrownianPath {
    double dt = 0.0;
    std::uint64_t master_seed = 0;
    std::uint64_t path_index = 0;
    int level = 0;  // number of dyadic refinements since sampling
    std::vector<double> increments;
    std::vector<double> cumulative;

    std::shared_ptr<const BrownianPath> parent;  // set by refine_brownian

    std::size_t steps() const { return increments.size(); }
    double horizon() const { return dt * static_cast<double>(steps()); }

    void rebuild_cumulative();
};

/// i.i.d. N(0, dt) increments, reproducible from (master_seed, path_index).
BrownianPath sample_brownian(std::uint64_t master_seed, std::uint64_t path_index,
                             double dt, std::size_t m);

/// Brownian-bridge midpoint insertion. `factor` must be a power of two.
/// The refined path's coarse increments equal the original's exactly
/// (recover them with coarsen_brownian).
BrownianPath refine_brownian(const BrownianPath& path, int factor);

/// Inverse of refine_brownian. For a refined path the stored parent chain is
/// returned (bit-exact); for a directly sampled path adjacent increments are
/// summed, which is the shared-path protocol for strong-convergence studies.
BrownianPath coarsen_brownian(const BrownianPath& path, int factor);

}  // namespace snls
