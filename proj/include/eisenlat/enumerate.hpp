#pragma once

#include <cstddef>
#include <vector>

#include "eisenlat/lattice.hpp"

namespace eisenlat {

struct EnumerationOptions {
  // Cap on the number of returned vectors; exceeding it throws BudgetExceeded.
  std::size_t max_vectors = 1'000'000;
};

// All x with (x, x) == norm, sorted lexicographically. L must be definite;
// negative definite lattices are handled by a global sign flip. Uses exact
// rational Fincke-Pohst enumeration.
std::vector<IntVector> enumerate_vectors_of_norm(const Lattice& lattice,
                                                 const Integer& norm,
                                                 EnumerationOptions options = {});

}  // namespace eisenlat
