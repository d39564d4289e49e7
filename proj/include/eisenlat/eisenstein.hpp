#pragma once

#include <string>
#include <vector>

#include "eisenlat/isometry.hpp"

namespace eisenlat {

// a + b*zeta in Q(zeta), zeta^2 = -1 - zeta. The E-module structure on a
// lattice makes zeta act as the isometry rho.
struct EisNum {
  Rational a = 0;
  Rational b = 0;

  EisNum() = default;
  EisNum(Rational re, Rational zeta) : a(std::move(re)), b(std::move(zeta)) {}
  static EisNum zeta() { return {0, 1}; }
  // theta = zeta - zeta^2 = 1 + 2 zeta, theta^2 = -3
  static EisNum theta() { return {1, 2}; }

  EisNum conj() const { return {a - b, -b}; }
  Rational norm() const { return a * a - a * b + b * b; }
  Rational real_part() const { return a - b / 2; }
  bool is_real() const { return b == 0; }
  bool is_integral() const;
  bool is_zero() const { return a == 0 && b == 0; }
  EisNum inverse() const;

  friend EisNum operator+(const EisNum& x, const EisNum& y) { return {x.a + y.a, x.b + y.b}; }
  friend EisNum operator-(const EisNum& x, const EisNum& y) { return {x.a - y.a, x.b - y.b}; }
  friend EisNum operator-(const EisNum& x) { return {-x.a, -x.b}; }
  friend EisNum operator*(const EisNum& x, const EisNum& y) {
    // (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2, z^2 = -1 - z
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
  }
  friend EisNum operator/(const EisNum& x, const EisNum& y) { return x * y.inverse(); }
  friend bool operator==(const EisNum& x, const EisNum& y) { return x.a == y.a && x.b == y.b; }
};

std::string to_string(const EisNum& z);

using EisMatrix = std::vector<std::vector<EisNum>>;

// A lattice with an order-3 fixed-point-free isometry and an E-basis
// b_1..b_m, so that b_1, rho b_1, ..., b_m, rho b_m is a Z-basis.
struct EModule {
  Lattice lattice;
  Isometry rho;
  std::vector<IntVector> e_basis;

  std::size_t e_rank() const { return e_basis.size(); }
  // Columns b_1, rho b_1, b_2, rho b_2, ...
  IntMatrix z_basis() const;
};

// Throws HasFixedVectors, OddRank, WrongOrder.
EModule as_e_module(const Isometry& rho);

// H(x, y) = 1/2 [ (x, y) - theta/3 (x, rho^2 y - rho y) ].
// Linear in x with H(rho x, y) = zeta H(x, y); 2 Re H = ( , ). theta*H is
// always an Eisenstein integer on lattice vectors; NonIntegralHermitian is
// raised otherwise.
EisNum hermitian_form(const EModule& module, const IntVector& x, const IntVector& y);
EisMatrix hermitian_gram(const EModule& module);
EisNum determinant(const EisMatrix& m);

// The hermitian determinant is a unit of E (for a hermitian Gram: +-1).
bool is_unimodular_over_E(const EModule& module);

}  // namespace eisenlat
