#include "eisenlat/lattice.hpp"

#include <vector>

namespace eisenlat {

Lattice make_lattice(IntMatrix gram, std::string name) {
  if (!gram.is_square()) fail(ErrorCode::NotSymmetric, "Gram matrix is not square");
  if (!gram.is_symmetric()) fail(ErrorCode::NotSymmetric, "Gram matrix is not symmetric");
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    if (floor_mod(gram(i, i), 2) != 0) {
      fail(ErrorCode::NotEven, "diagonal entry " + std::to_string(i) + " is " +
                                   to_string(gram(i, i)));
    }
  }
  Lattice l;
  l.gram_ = std::move(gram);
  l.name_ = std::move(name);
  return l;
}

Lattice Lattice::renamed(std::string name) const {
  Lattice l = *this;
  l.name_ = std::move(name);
  return l;
}

Integer Lattice::determinant() const { return eisenlat::determinant(gram_); }

namespace {

std::string join_names(const std::string& a, const std::string& b) {
  if (a.empty() || b.empty()) return {};
  return a + "+" + b;
}

}  // namespace

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  if (a.rank() == 0) return b;
  if (b.rank() == 0) return a;
  return make_lattice(block_diagonal(a.gram(), b.gram()),
                      join_names(a.name(), b.name()));
}

Lattice twist(const Lattice& lattice, const Integer& alpha) {
  if (alpha == 0) fail(ErrorCode::ZeroScale, "twist by zero");
  if (alpha == 1) return lattice;
  std::string name;
  if (!lattice.name().empty())
    name = lattice.name() + "(" + to_string(alpha) + ")";
  return make_lattice(scaled(lattice.gram(), alpha), name);
}

Lattice dual_scaled(const Lattice& lattice, const Integer& p) {
  if (p == 0) fail(ErrorCode::ZeroScale, "dual scaled by zero");
  RatMatrix inv = inverse(to_rational(lattice.gram()));
  RatMatrix g = scaled(inv, Rational(p));
  IntMatrix gi = to_integer(g);
  for (std::size_t i = 0; i < gi.rows(); ++i)
    if (floor_mod(gi(i, i), 2) != 0)
      fail(ErrorCode::NonIntegralScale, "scaled dual is not even");
  std::string name;
  if (!lattice.name().empty())
    name = lattice.name() + "*(" + to_string(p) + ")";
  return make_lattice(std::move(gi), name);
}

Signature signature(const Lattice& lattice) { return signature(lattice.gram()); }

Signature signature(const IntMatrix& symmetric) {
  if (!symmetric.is_symmetric())
    fail(ErrorCode::NotSymmetric, "signature needs a symmetric matrix");
  RatMatrix a = to_rational(symmetric);
  const std::size_t n = a.rows();
  std::vector<bool> done(n, false);
  Signature sig;
  std::size_t remaining = n;

  while (remaining > 0) {
    // First remaining index with nonzero diagonal.
    std::size_t piv = n;
    for (std::size_t i = 0; i < n && piv == n; ++i)
      if (!done[i] && a(i, i) != 0) piv = i;

    if (piv == n) {
      // All remaining diagonal entries vanish: split off a hyperbolic pair by
      // x_i <- x_i + x_j, which makes the (i,i) entry 2 a(i,j) != 0.
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i) {
        if (done[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j)
          if (!done[j] && a(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      }
      if (pi == n) break;  // the rest is totally isotropic: radical
      a.add_row_multiple(pi, pj, Rational(1));
      a.add_col_multiple(pi, pj, Rational(1));
      piv = pi;
    }

    const Rational pivot = a(piv, piv);
    if (pivot > 0) ++sig.n_plus; else ++sig.n_minus;
    for (std::size_t r = 0; r < n; ++r) {
      if (done[r] || r == piv || a(r, piv) == 0) continue;
      Rational f = -a(r, piv) / pivot;
      a.add_row_multiple(r, piv, f);
      a.add_col_multiple(r, piv, f);
    }
    done[piv] = true;
    --remaining;
  }
  sig.n_zero = remaining;
  return sig;
}

Lattice induced_lattice(const Lattice& lattice, const IntMatrix& basis,
                        std::string name) {
  if (basis.rows() != lattice.rank())
    fail(ErrorCode::RankMismatch, "basis vectors do not live in the lattice");
  return make_lattice(basis.transpose() * lattice.gram() * basis, std::move(name));
}

}  // namespace eisenlat
