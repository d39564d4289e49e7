#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "eisenlat/lattice.hpp"

namespace eisenlat {

// Root lattices follow the negative definite convention: A_n, D_n, E_n have
// Gram = -(Cartan matrix), E_n in Bourbaki node order.
//
// Accepted names: U, A<n>, D<n> (n >= 4), E6, E7, E8, A2(-1), E6*(3), K12,
// L_K3. An optional scale twists the result (U + scale 3 == U(3)).
Lattice standard_lattice(std::string_view name,
                         std::optional<Integer> scale = std::nullopt);

// The Coxeter-Todd lattice from the vendored Gram matrix, re-verified on every
// call: rank 12, even, negative definite, det 3^6, 3-elementary with a = 6.
Lattice coxeter_todd_lattice();

// Parses sums such as "U+U(3)+E8+E8", "U(3)+E6*(3)" or "U+A2^5". A term is
// <base>[*](<alpha>)?[^<count>]; "L*(p)" is dual_scaled(L, p), "L(a)" is
// twist(L, a). Unicode "⊕" is accepted in place of "+".
Lattice lattice_from_expression(std::string_view expression);

}  // namespace eisenlat
