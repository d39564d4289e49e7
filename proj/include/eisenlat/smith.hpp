#pragma once

#include <vector>

#include "eisenlat/matrix.hpp"

namespace eisenlat {

// left * M * right == diagonal with diagonal entries d_0 | d_1 | ... (all
// non-negative, zeros last). `left_inverse` is left^{-1}, tracked alongside so
// column spans can be read off without a second inversion.
struct SmithDecomposition {
  IntMatrix diagonal;
  IntMatrix left;
  IntMatrix right;
  IntMatrix left_inverse;

  // Number of nonzero diagonal entries.
  std::size_t rank() const;
  IntVector invariant_factors() const;  // all min(rows, cols) diagonal entries
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Z-basis (as columns) of {x in Z^n : M x = 0}. Always saturated.
IntMatrix integer_kernel(const IntMatrix& m);

// Z-basis (as columns) of the subgroup of Z^n generated by the columns of m.
IntMatrix column_span_basis(const IntMatrix& generators);

// Z-basis of (span_Q columns) intersected with Z^n.
IntMatrix saturate_columns(const IntMatrix& generators);

}  // namespace eisenlat
