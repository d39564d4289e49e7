// Generated by tools/gen_vendored.cpp; do not edit.
#include "eisenlat/vendored.hpp"

namespace eisenlat::vendored {

namespace {

const std::int64_t kK12Gram[] = {
    -4, -1, -2, -2, -2, -2, -2, -2, -2, -2, -2, -1,
    -1, -4, -2, -2, -2, -2, -2, -2, -2, -2, -2, -2,
    -2, -2, -4, -2, -2, -2, -2, -2, -2, -2, -1, -2,
    -2, -2, -2, -4, -2, -2, -2, -2, -2, -1, -2, -2,
    -2, -2, -2, -2, -4, -1, -2, -2, -2, -2, -2, -1,
    -2, -2, -2, -2, -1, -4, -2, -2, -2, -2, -2, -2,
    -2, -2, -2, -2, -2, -2, -4, -1, -1, -2, -2, -2,
    -2, -2, -2, -2, -2, -2, -1, -4, -1, -2, -2, -1,
    -2, -2, -2, -2, -2, -2, -1, -1, -4, -2, -2, 0,
    -2, -2, -2, -1, -2, -2, -2, -2, -2, -4, -2, -1,
    -2, -2, -1, -2, -2, -2, -2, -2, -2, -2, -4, 0,
    -1, -2, -2, -2, -1, -2, -2, -1, 0, -1, 0, -4,
};

const std::int64_t kE6Isometry[] = {
    -1, 0, 0, 0, 0, 1,
    -1, -1, 0, 1, -1, 1,
    -1, 0, 0, 0, -1, 2,
    -2, -1, 1, 0, -1, 2,
    -2, 0, 1, 0, -1, 1,
    -1, 0, 0, 0, 0, 0,
};

const std::int64_t kE8Isometry[] = {
    -2, 0, 0, 0, 1, 0, 0, -1,
    -3, -1, 1, 0, 1, 0, 0, -1,
    -3, -1, 0, 0, 2, 0, 0, -2,
    -5, -1, 1, 0, 2, 0, 0, -3,
    -4, -1, 0, 1, 1, 0, 0, -2,
    -3, -1, 0, 1, 1, 0, -1, -1,
    -2, -1, 0, 1, 0, 1, -1, -1,
    -1, -1, 0, 1, 0, 0, 0, -1,
};

const std::int64_t kK12Isometry[] = {
    -1, -2, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1,
    -1, -3, -2, -2, -2, -2, -2, -2, -2, -2, -2, -1,
    -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -2, 0,
    -2, -2, -2, -3, -2, -2, -2, -2, -2, -1, -2, -1,
    -1, -1, -1, -1, -1, -2, -1, -1, -1, -1, -1, -1,
    -2, -2, -2, -2, -1, -3, -2, -2, -2, -2, -2, -1,
    1, 2, 1, 2, 1, 2, 1, 2, 1, 1, 2, 1,
    2, 3, 2, 3, 2, 3, 2, 2, 3, 2, 3, 1,
    3, 4, 3, 4, 3, 4, 4, 3, 3, 3, 4, 2,
    -1, -1, -1, -2, -1, -1, -1, -1, -1, -1, -1, -1,
    1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 0, 1,
    3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 1,
};

}  // namespace

std::span<const std::int64_t> k12_gram() { return kK12Gram; }
std::span<const std::int64_t> e6_isometry() { return kE6Isometry; }
std::span<const std::int64_t> e8_isometry() { return kE8Isometry; }
std::span<const std::int64_t> k12_isometry() { return kK12Isometry; }

}  // namespace eisenlat::vendored
