#include "snls/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace snls {

static_assert(std::endian::native == std::endian::little,
              "snapshot format assumes a little-endian host");

namespace {

template <typename T>
void put(std::ostream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw std::runtime_error("snapshot: truncated file");
    return v;
}

}  // namespace

void write_snapshot(const std::string& path, const Field& f, double time) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("snapshot: cannot open " + path);
    os.write("SNLS", 4);
    put<std::uint16_t>(os, kSnapshotVersion);
    put<std::uint8_t>(os, static_cast<std::uint8_t>(f.grid.dim()));
    put<std::uint32_t>(os, static_cast<std::uint32_t>(f.grid.n()));
    put<double>(os, f.grid.half_length());
    put<double>(os, time);
    for (const cplx& z : f.a) {
        put<double>(os, z.real());
        put<double>(os, z.imag());
    }
    if (!os) throw std::runtime_error("snapshot: write failed for " + path);
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("snapshot: cannot open " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "SNLS", 4) != 0)
        throw std::runtime_error("snapshot: bad magic in " + path);
    auto version = get<std::uint16_t>(is);
    if (version != kSnapshotVersion)
        throw std::runtime_error("snapshot: unsupported format version");
    int d = get<std::uint8_t>(is);
    int n = static_cast<int>(get<std::uint32_t>(is));
    double l = get<double>(is);
    double time = get<double>(is);

    Snapshot snap;
    snap.time = time;
    snap.field = Field(GridSpec(d, n, l));
    for (cplx& z : snap.field.a) {
        double re = get<double>(is);
        double im = get<double>(is);
        z = cplx{re, im};
    }
    return snap;
}

}  // namespace snls
