#include "snls/brownian.hpp"

#include <cmath>
#include <stdexcept>

namespace snls {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

Philox4x32::Block Philox4x32::operator()(std::uint32_t c0, std::uint32_t c1,
                                         std::uint32_t c2, std::uint32_t c3) const {
    std::uint32_t k0 = key0, k1 = key1;
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, c0, hi0, lo0);
        mulhilo(kMul1, c2, hi1, lo1);
        std::uint32_t n0 = hi1 ^ c1 ^ k0;
        std::uint32_t n1 = lo1;
        std::uint32_t n2 = hi0 ^ c3 ^ k1;
        std::uint32_t n3 = lo0;
        c0 = n0; c1 = n1; c2 = n2; c3 = n3;
        k0 += kWeyl0;
        k1 += kWeyl1;
    }
    return Block{{c0, c1, c2, c3}};
}

namespace {

Philox4x32::Block block_at(std::uint64_t master_seed, std::uint64_t path_index,
                           std::uint32_t stream, std::uint64_t block) {
    Philox4x32 gen{static_cast<std::uint32_t>(master_seed),
                   static_cast<std::uint32_t>(master_seed >> 32)};
    std::uint32_t c0 = static_cast<std::uint32_t>(block);
    std::uint32_t c1 = static_cast<std::uint32_t>(block >> 32);
    std::uint32_t c2 = static_cast<std::uint32_t>(path_index);
    std::uint32_t c3 = static_cast<std::uint32_t>(path_index >> 32) ^ (stream * kWeyl0);
    return gen(c0, c1, c2, c3);
}

inline double u64_to_unit(std::uint64_t u) {
    return static_cast<double>(u >> 11) * 0x1.0p-53;
}

// Each counter block yields two uniforms, hence one Box-Muller pair.
void normal_pair(std::uint64_t master_seed, std::uint64_t path_index,
                 std::uint32_t stream, std::uint64_t pair_index, double& z0, double& z1) {
    Philox4x32::Block b = block_at(master_seed, path_index, stream, pair_index);
    std::uint64_t u0 = (static_cast<std::uint64_t>(b.w[0]) << 32) | b.w[1];
    std::uint64_t u1 = (static_cast<std::uint64_t>(b.w[2]) << 32) | b.w[3];
    double r = std::sqrt(-2.0 * std::log(1.0 - u64_to_unit(u0)));  // 1-u in (0,1]
    double theta = 2.0 * 3.141592653589793238462643383279502884 * u64_to_unit(u1);
    z0 = r * std::cos(theta);
    z1 = r * std::sin(theta);
}

}  // namespace

double normal_deviate(std::uint64_t master_seed, std::uint64_t path_index,
                      std::uint32_t stream, std::uint64_t j) {
    double z0, z1;
    normal_pair(master_seed, path_index, stream, j >> 1, z0, z1);
    return (j & 1) ? z1 : z0;
}

double uniform_deviate(std::uint64_t master_seed, std::uint64_t path_index,
                       std::uint32_t stream, std::uint64_t j) {
    Philox4x32::Block b = block_at(master_seed, path_index, stream, j >> 1);
    std::uint64_t u = (j & 1) ? (static_cast<std::uint64_t>(b.w[2]) << 32) | b.w[3]
                              : (static_cast<std::uint64_t>(b.w[0]) << 32) | b.w[1];
    return u64_to_unit(u);
}

void BrownianPath::rebuild_cumulative() {
    cumulative.assign(increments.size() + 1, 0.0);
    double acc = 0.0;
    for (std::size_t j = 0; j < increments.size(); ++j) {
        acc += increments[j];
        cumulative[j + 1] = acc;
    }
}

BrownianPath sample_brownian(std::uint64_t master_seed, std::uint64_t path_index,
                             double dt, std::size_t m) {
    if (!(dt > 0.0)) throw std::invalid_argument("sample_brownian: dt must be positive");
    if (m < 1) throw std::invalid_argument("sample_brownian: need at least one step");

    BrownianPath p;
    p.dt = dt;
    p.master_seed = master_seed;
    p.path_index = path_index;
    p.increments.resize(m);
    const double s = std::sqrt(dt);
    for (std::size_t j = 0; j < m; ++j)
        p.increments[j] = s * normal_deviate(master_seed, path_index, /*stream=*/0, j);
    p.rebuild_cumulative();
    return p;
}

BrownianPath refine_brownian(const BrownianPath& path, int factor) {
    if (!power_of_two(factor))
        throw std::invalid_argument("refine_brownian: factor must be a power of two");
    if (factor == 1) return path;

    BrownianPath cur = path;
    for (int f = factor; f > 1; f /= 2) {
        BrownianPath fine;
        fine.dt = cur.dt / 2.0;
        fine.master_seed = cur.master_seed;
        fine.path_index = cur.path_index;
        fine.level = cur.level + 1;
        fine.parent = std::make_shared<BrownianPath>(cur);
        fine.increments.resize(2 * cur.steps());
        // Midpoint bridge: B_mid - (B_j + B_{j+1})/2 ~ N(0, dt/4).
        const double s = 0.5 * std::sqrt(cur.dt);
        for (std::size_t j = 0; j < cur.steps(); ++j) {
            double xi = s * normal_deviate(cur.master_seed, cur.path_index,
                                           static_cast<std::uint32_t>(fine.level), j);
            double half = 0.5 * cur.increments[j];  // exact in binary fp
            fine.increments[2 * j] = half + xi;
            fine.increments[2 * j + 1] = cur.increments[j] - fine.increments[2 * j];
        }
        fine.rebuild_cumulative();
        cur = std::move(fine);
    }
    return cur;
}

BrownianPath coarsen_brownian(const BrownianPath& path, int factor) {
    if (!power_of_two(factor))
        throw std::invalid_argument("coarsen_brownian: factor must be a power of two");
    if (factor == 1) return path;

    if (path.parent) {
        BrownianPath up = *path.parent;
        return coarsen_brownian(up, factor / 2);
    }

    if (path.steps() % static_cast<std::size_t>(factor) != 0)
        throw std::invalid_argument("coarsen_brownian: step count not divisible by factor");
    BrownianPath coarse;
    coarse.dt = path.dt * factor;
    coarse.master_seed = path.master_seed;
    coarse.path_index = path.path_index;
    coarse.level = path.level;  // summation protocol, no bridge bookkeeping
    coarse.increments.resize(path.steps() / static_cast<std::size_t>(factor));
    for (std::size_t j = 0; j < coarse.increments.size(); ++j) {
        double s = 0.0;
        for (int q = 0; q < factor; ++q)
            s += path.increments[j * static_cast<std::size_t>(factor) + static_cast<std::size_t>(q)];
        coarse.increments[j] = s;
    }
    coarse.rebuild_cumulative();
    return coarse;
}

}  // namespace snls
