#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "eisenlat/lattice.hpp"
#include "eisenlat/sublattice.hpp"

namespace eisenlat {

// Matrix acting on column coordinate vectors of `lattice`; column j is the
// image of the j-th basis vector. Construction checks M^T G M == G.
class Isometry {
 public:
  Isometry(Lattice lattice, IntMatrix matrix);

  const Lattice& lattice() const noexcept { return lattice_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  IntVector apply(const IntVector& x) const { return matrix_ * x; }

 private:
  Lattice lattice_;
  IntMatrix matrix_;
};

struct IsometryCheck {
  bool valid = false;
  // Smallest k <= 12 with M^k == I; empty when the order exceeds 12 (or M is
  // not invertible over Z).
  std::optional<unsigned> order;
};

inline constexpr unsigned kMaxCheckedOrder = 12;

// Throws RankMismatch unless M is square of the lattice's rank.
IsometryCheck verify_isometry(const Lattice& lattice, const IntMatrix& m);

Sublattice fixed_sublattice(const Isometry& rho);
// Kernel of I + rho + rho^2; throws WrongOrder unless rho^3 == I.
Sublattice coinvariant_sublattice(const Isometry& rho);
bool is_fixed_point_free(const Isometry& rho);

// (rho - I) g lies in L for every generator g of A_L.
bool acts_trivially_on_discriminant(const Isometry& rho);

// Block-diagonal assembly of isometries of the summands of a direct sum.
Isometry direct_sum(const Isometry& a, const Isometry& b);
Isometry identity_isometry(const Lattice& lattice);

// Verified order-3 fixed-point-free isometries acting trivially on A_L:
// "A2", "A2(-1)", "U+U(3)", "U+U", "E6", "E8", "K12". The lattice is the
// matching standard_lattice(name) (with "U+U(3)" ordered e1, e2, f1, f2).
Isometry standard_isometry(std::string_view name);

struct IsometrySearchOptions {
  bool require_fixed_point_free = true;
  bool require_trivial_on_discriminant = true;
  std::size_t max_nodes = 50'000'000;
  std::size_t max_candidates = 1'000'000;
  std::size_t max_rank = 12;
};

// Backtracking over images of the basis vectors, drawn from vectors of the
// same norm in lexicographic order; returns the first full solution of order
// exactly 3 meeting the requested conditions. Throws NotFound,
// IndefiniteLattice or BudgetExceeded.
Isometry find_order3_isometry(const Lattice& lattice,
                              IsometrySearchOptions options = {});

}  // namespace eisenlat
