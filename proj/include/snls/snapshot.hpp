#pragma once

#include <string>

#include "snls/grid.hpp"

namespace snls {

/// Snapshot binary format:
///   magic "SNLS", format version u16, d u8, N u32, L f64, time f64,
///   then N^d little-endian (re, im) f64 pairs in row-major axis order.
inline constexpr std::uint16_t kSnapshotVersion = 1;

void write_snapshot(const std::string& path, const Field& f, double time);

struct Snapshot {
    Field field;
    double time = 0.0;
};

Snapshot read_snapshot(const std::string& path);

}  // namespace snls
