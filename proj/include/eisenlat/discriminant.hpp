#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "eisenlat/lattice.hpp"

namespace eisenlat {

// A_L = L^* / L written as a product of cyclic groups Z/d_1 x ... x Z/d_r with
// d_1 | d_2 | ... and every d_i > 1.
struct DiscriminantGroup {
  IntVector invariant_factors;
  // Dual-lattice representatives g_i, in lattice coordinates; the
  // denominators of g_i divide d_i.
  std::vector<RatVector> generators;
  // Row i maps G*x (integral for x in L^*) to the i-th coordinate mod d_i.
  IntMatrix reduction;

  std::size_t length() const { return invariant_factors.size(); }
  Integer order() const;

  // Coordinates (c_i mod d_i) of the class of a dual vector x.
  IntVector coordinates(const IntMatrix& gram, const RatVector& dual_vector) const;
  RatVector representative(const IntVector& coords) const;
};

// Throws DegenerateForm when det(G) == 0.
DiscriminantGroup discriminant_group(const Lattice& lattice);

// Number of invariant factors divisible by p.
std::size_t a_invariant(const Lattice& lattice, const Integer& p);
// Every invariant factor equals p (vacuously true for unimodular lattices).
bool is_p_elementary(const Lattice& lattice, const Integer& p);

struct DiscriminantFormOptions {
  std::size_t max_elements = 100000;
};

// q(x) = x^T G x mod 2 on A_L, tabulated on every element. Elements are
// indexed in mixed radix, first coordinate fastest.
class FiniteQuadraticForm {
 public:
  FiniteQuadraticForm(DiscriminantGroup group, RatMatrix generator_products,
                      std::size_t max_elements);

  const DiscriminantGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<Rational>& values() const noexcept { return values_; }

  IntVector element(std::size_t index) const;
  std::size_t index(const IntVector& coords) const;

  // q in [0, 2) and b in [0, 1) evaluated from generator data.
  Rational q(const IntVector& coords) const;
  Rational b(const IntVector& x, const IntVector& y) const;

  FiniteQuadraticForm negated() const;

  // Sum over A_L of exp(pi i q(x)).
  std::complex<double> gauss_sum() const;

 private:
  DiscriminantGroup group_;
  RatMatrix products_;  // (g_i, g_j) in Q, unreduced
  std::vector<Rational> values_;
};

FiniteQuadraticForm discriminant_form(const Lattice& lattice,
                                      DiscriminantFormOptions options = {});

// Residue s mod 8 with gauss_sum / sqrt|A| = exp(2 pi i s / 8), accepted
// when the normalized sum lies within `tolerance` of that root of unity.
// Throws CheckFailed otherwise.
int gauss_signature(const FiniteQuadraticForm& form, double tolerance = 1e-6);

}  // namespace eisenlat
