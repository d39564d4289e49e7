#pragma once

#include <string>

#include "eisenlat/matrix.hpp"

namespace eisenlat {

struct Signature {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  std::size_t rank() const { return n_plus + n_minus + n_zero; }
  bool is_hyperbolic() const { return n_zero == 0 && n_plus == 1; }
  bool is_positive_definite() const { return n_zero == 0 && n_minus == 0; }
  bool is_negative_definite() const { return n_zero == 0 && n_plus == 0; }
  bool is_definite() const { return is_positive_definite() || is_negative_definite(); }
  friend bool operator==(const Signature&, const Signature&) = default;
};

// An even integral lattice presented by a symmetric Gram matrix. Degenerate
// Gram matrices are allowed; discriminant operations reject them.
class Lattice {
 public:
  Lattice() = default;

  const IntMatrix& gram() const noexcept { return gram_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t rank() const noexcept { return gram_.rows(); }

  Lattice renamed(std::string name) const;
  Integer determinant() const;
  bool is_degenerate() const { return determinant() == 0; }
  Integer inner(const IntVector& x, const IntVector& y) const {
    return bilinear(gram_, x, y);
  }
  Integer norm(const IntVector& x) const { return bilinear(gram_, x, x); }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.gram_ == b.gram_;
  }

 private:
  friend Lattice make_lattice(IntMatrix gram, std::string name);
  IntMatrix gram_;
  std::string name_;
};

// Throws NotSymmetric / NotEven.
Lattice make_lattice(IntMatrix gram, std::string name = {});

Lattice direct_sum(const Lattice& a, const Lattice& b);
// Scales the form by alpha; throws ZeroScale for alpha == 0.
Lattice twist(const Lattice& lattice, const Integer& alpha);
// Gram p * G^{-1} in the dual basis; throws NonIntegralScale if that is not
// an even integral form, DegenerateForm if G is singular.
Lattice dual_scaled(const Lattice& lattice, const Integer& p);

// Exact congruence diagonalization over Q.
Signature signature(const Lattice& lattice);
Signature signature(const IntMatrix& symmetric);

// Gram of the sublattice spanned by the columns of `basis`: B^T G B.
Lattice induced_lattice(const Lattice& lattice, const IntMatrix& basis,
                        std::string name = {});

}  // namespace eisenlat
