#include "eisenlat/enumerate.hpp"

#include <algorithm>
#include <cmath>

namespace eisenlat {

namespace {

// Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2, stored as d_i = q(i,i) and
// mu_ij = q(i,j) for j > i.
RatMatrix square_completion(const IntMatrix& gram, const Integer& sign) {
  const std::size_t n = gram.rows();
  RatMatrix q = scaled(to_rational(gram), Rational(sign));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) /= q(i, i);
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
  }
  return q;
}

class Enumerator {
 public:
  Enumerator(RatMatrix q, std::size_t max_vectors)
      : q_(std::move(q)), n_(q_.rows()), x_(n_), max_(max_vectors) {}

  std::vector<IntVector> run(const Rational& target) {
    if (n_ == 0) {
      if (target == 0) out_.push_back({});
      return out_;
    }
    level(n_ - 1, target);
    return std::move(out_);
  }

 private:
  // Smallest / largest integer x with d (x - c)^2 <= budget.
  static void bounds(const Rational& c, const Rational& radius_sq, Integer& lo,
                     Integer& hi) {
    auto fits = [&](const Integer& x) {
      Rational dx = Rational(x) - c;
      return dx * dx <= radius_sq;
    };
    const double cd = static_cast<double>(c);
    const double r = std::sqrt(std::max(0.0, static_cast<double>(radius_sq)));
    lo = Integer(static_cast<long long>(std::floor(cd - r)));
    hi = Integer(static_cast<long long>(std::ceil(cd + r)));
    while (lo <= hi && !fits(lo)) ++lo;
    while (fits(Integer(lo - 1))) --lo;
    while (hi >= lo && !fits(hi)) --hi;
    while (fits(Integer(hi + 1))) ++hi;
  }

  void level(std::size_t i, const Rational& budget) {
    Rational center = 0;
    for (std::size_t j = i + 1; j < n_; ++j) center -= q_(i, j) * Rational(x_[j]);
    const Rational& d = q_(i, i);
    Integer lo, hi;
    bounds(center, budget / d, lo, hi);
    for (Integer v = lo; v <= hi; ++v) {
      Rational dx = Rational(v) - center;
      Rational rest = budget - d * dx * dx;
      if (rest < 0) continue;
      x_[i] = v;
      if (i == 0) {
        if (rest == 0) {
          if (out_.size() >= max_)
            fail(ErrorCode::BudgetExceeded,
                 "more than " + std::to_string(max_) + " vectors");
          out_.push_back(x_);
        }
      } else {
        level(i - 1, rest);
      }
    }
    x_[i] = 0;
  }

  RatMatrix q_;
  std::size_t n_;
  IntVector x_;
  std::size_t max_;
  std::vector<IntVector> out_;
};

}  // namespace

std::vector<IntVector> enumerate_vectors_of_norm(const Lattice& lattice,
                                                 const Integer& norm,
                                                 EnumerationOptions options) {
  Signature sig = signature(lattice);
  if (!sig.is_definite() && lattice.rank() > 0)
    fail(ErrorCode::IndefiniteLattice, "enumeration needs a definite lattice");
  const Integer sign = sig.is_negative_definite() && lattice.rank() > 0 ? -1 : 1;
  const Integer target = sign * norm;
  if (target < 0 || floor_mod(norm, 2) != 0) return {};

  Enumerator e(square_completion(lattice.gram(), sign), options.max_vectors);
  auto out = e.run(Rational(target));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace eisenlat
