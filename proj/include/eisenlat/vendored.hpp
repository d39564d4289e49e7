#pragma once

#include <cstdint>
#include <span>

// Fixed integer tables shipped with the library, row-major. Every consumer
// re-verifies them before use; see tools/gen_vendored.cpp for provenance.
namespace eisenlat::vendored {

// Coxeter-Todd lattice, Gram in a basis of minimal vectors (norm -4).
std::span<const std::int64_t> k12_gram();       // 12 x 12
// Order-3 fixed-point-free isometries, columns are images of basis vectors,
// in the bases of standard_lattice("E6"), ("E8"), ("K12").
std::span<const std::int64_t> e6_isometry();    // 6 x 6
std::span<const std::int64_t> e8_isometry();    // 8 x 8
std::span<const std::int64_t> k12_isometry();   // 12 x 12

}  // namespace eisenlat::vendored
