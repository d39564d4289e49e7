#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "eisenlat/lattice.hpp"
#include "eisenlat/standard.hpp"

namespace eisenlat::testing {

// EISENLAT_SEED overrides the fixed default.
inline std::uint64_t test_seed() {
  if (const char* s = std::getenv("EISENLAT_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240917;
}

inline std::string seed_note() { return "EISENLAT_SEED=" + std::to_string(test_seed()); }

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Product of random elementary operations: determinant +-1 by construction.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
  IntMatrix p = IntMatrix::identity(n);
  if (n < 2) return p;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> f(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) {
      p.negate_col(i);
      continue;
    }
    p.add_col_multiple(i, j, Integer(f(rng)));
  }
  return p;
}

inline Lattice congruent(const Lattice& l, const IntMatrix& p) {
  return make_lattice(p.transpose() * l.gram() * p, l.name());
}

// x^T G x == target for every x in the box |x_i| <= b_i, with
// b_i = floor(sqrt(target * (G^-1)_ii)) for positive definite G (the
// Cauchy-Schwarz bound).
inline std::vector<IntVector> brute_force_norm(const Lattice& l, const Integer& norm) {
  const std::size_t n = l.rank();
  IntMatrix g = l.gram();
  Integer target = norm;
  if (g(0, 0) < 0) {
    g = scaled(g, Integer(-1));
    target = -target;
  }
  std::vector<IntVector> out;
  if (target < 0) return out;
  RatMatrix inv = inverse(to_rational(g));
  IntVector bound(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational r = Rational(target) * inv(i, i);
    Integer b = 0;
    while (Rational((b + 1) * (b + 1)) <= r) ++b;
    bound[i] = b;
  }
  IntVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -bound[i];
  while (true) {
    if (bilinear(g, x, x) == target) out.push_back(x);
    std::size_t i = 0;
    while (i < n && x[i] == bound[i]) {
      x[i] = -bound[i];
      ++i;
    }
    if (i == n) break;
    ++x[i];
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

// Roots of E8 in the coordinate model D8 u (D8 + 1/2), written in the
// Bourbaki simple roots of standard_lattice("E8"). Built by scanning every
// vector with coordinates in {-1, -1/2, 0, 1/2, 1}.
inline std::vector<IntVector> e8_roots_from_model() {
  // Doubled coordinates of the simple roots alpha_1..alpha_8.
  const int simple[8][8] = {
      {1, -1, -1, -1, -1, -1, -1, 1}, {2, 2, 0, 0, 0, 0, 0, 0},  {-2, 2, 0, 0, 0, 0, 0, 0},
      {0, -2, 2, 0, 0, 0, 0, 0},      {0, 0, -2, 2, 0, 0, 0, 0}, {0, 0, 0, -2, 2, 0, 0, 0},
      {0, 0, 0, 0, -2, 2, 0, 0},      {0, 0, 0, 0, 0, -2, 2, 0}};
  RatMatrix basis(8, 8);
  for (std::size_t j = 0; j < 8; ++j)
    for (std::size_t i = 0; i < 8; ++i) basis(i, j) = Rational(simple[j][i], 2);
  RatMatrix inv = inverse(basis);
  std::vector<IntVector> out;
  int c[8];
  for (int code = 0; code < 390625; ++code) {
    int t = code;
    int sum2 = 0;
    for (int i = 0; i < 8; ++i) {
      c[i] = t % 5 - 2;  // doubled coordinate in {-2..2}
      t /= 5;
      sum2 += c[i] * c[i];
    }
    if (sum2 != 8) continue;  // norm 2
    const bool all_odd = std::all_of(c, c + 8, [](int v) { return v % 2 != 0; });
    const bool all_even = std::all_of(c, c + 8, [](int v) { return v % 2 == 0; });
    if (!all_odd && !all_even) continue;
    int total = 0;
    for (int v : c) total += v;
    if (total % 4 != 0) continue;  // coordinate sum even
    RatVector y(8);
    for (int i = 0; i < 8; ++i) y[i] = Rational(c[i], 2);
    IntVector coords;
    for (const auto& v : inv * y) {
      if (!is_integral(v)) return {};
      coords.push_back(numerator(v));
    }
    out.push_back(coords);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace eisenlat::testing
