#include "eisenlat/discriminant.hpp"

#include <cmath>
#include <numbers>

#include "eisenlat/smith.hpp"

namespace eisenlat {

Integer DiscriminantGroup::order() const {
  Integer o = 1;
  for (const auto& d : invariant_factors) o *= d;
  return o;
}

IntVector DiscriminantGroup::coordinates(const IntMatrix& gram,
                                         const RatVector& dual_vector) const {
  RatVector y = to_rational(gram) * dual_vector;
  IntVector yi;
  yi.reserve(y.size());
  for (const auto& v : y) {
    if (!is_integral(v))
      fail(ErrorCode::InvalidArgument, "vector is not in the dual lattice");
    yi.push_back(numerator(v));
  }
  IntVector c = reduction * yi;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = floor_mod(c[i], invariant_factors[i]);
  return c;
}

RatVector DiscriminantGroup::representative(const IntVector& coords) const {
  const std::size_t n = generators.empty() ? 0 : generators.front().size();
  RatVector x(n, Rational(0));
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t k = 0; k < n; ++k) x[k] += Rational(coords[i]) * generators[i][k];
  return x;
}

DiscriminantGroup discriminant_group(const Lattice& lattice) {
  const IntMatrix& g = lattice.gram();
  if (lattice.determinant() == 0)
    fail(ErrorCode::DegenerateForm, "lattice '" + lattice.name() + "' is degenerate");
  SmithDecomposition s = smith_normal_form(g);
  const std::size_t n = g.rows();

  DiscriminantGroup group;
  std::vector<std::size_t> nontrivial;
  for (std::size_t i = 0; i < n; ++i)
    if (s.diagonal(i, i) > 1) nontrivial.push_back(i);

  group.reduction = IntMatrix(nontrivial.size(), n);
  for (std::size_t k = 0; k < nontrivial.size(); ++k) {
    const std::size_t i = nontrivial[k];
    const Integer& d = s.diagonal(i, i);
    group.invariant_factors.push_back(d);
    RatVector gen(n);
    for (std::size_t r = 0; r < n; ++r) gen[r] = Rational(s.right(r, i), d);
    group.generators.push_back(std::move(gen));
    for (std::size_t c = 0; c < n; ++c) group.reduction(k, c) = s.left(i, c);
  }
  return group;
}

std::size_t a_invariant(const Lattice& lattice, const Integer& p) {
  DiscriminantGroup g = discriminant_group(lattice);
  std::size_t a = 0;
  for (const auto& d : g.invariant_factors)
    if (floor_mod(d, p) == 0) ++a;
  return a;
}

bool is_p_elementary(const Lattice& lattice, const Integer& p) {
  DiscriminantGroup g = discriminant_group(lattice);
  for (const auto& d : g.invariant_factors)
    if (d != p) return false;
  return true;
}

FiniteQuadraticForm::FiniteQuadraticForm(DiscriminantGroup group,
                                         RatMatrix generator_products,
                                         std::size_t max_elements)
    : group_(std::move(group)), products_(std::move(generator_products)) {
  const Integer order = group_.order();
  if (order > Integer(max_elements)) {
    fail(ErrorCode::GroupTooLarge, "discriminant group of order " +
                                       to_string(order) + " exceeds cap " +
                                       std::to_string(max_elements));
  }
  const auto total = static_cast<std::size_t>(order);
  values_.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) values_.push_back(q(element(idx)));
}

IntVector FiniteQuadraticForm::element(std::size_t index) const {
  IntVector c(group_.length());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto d = static_cast<std::size_t>(group_.invariant_factors[i]);
    c[i] = index % d;
    index /= d;
  }
  return c;
}

std::size_t FiniteQuadraticForm::index(const IntVector& coords) const {
  std::size_t idx = 0;
  for (std::size_t i = coords.size(); i-- > 0;) {
    const Integer& d = group_.invariant_factors[i];
    idx = idx * static_cast<std::size_t>(d) +
          static_cast<std::size_t>(floor_mod(coords[i], d));
  }
  return idx;
}

Rational FiniteQuadraticForm::q(const IntVector& c) const {
  Rational v = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    v += Rational(c[i] * c[i]) * products_(i, i);
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c[j] != 0) v += Rational(2 * c[i] * c[j]) * products_(i, j);
  }
  return mod(v, 2);
}

Rational FiniteQuadraticForm::b(const IntVector& x, const IntVector& y) const {
  Rational v = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      v += Rational(x[i] * y[j]) * products_(i, j);
  return mod(v, 1);
}

FiniteQuadraticForm FiniteQuadraticForm::negated() const {
  return FiniteQuadraticForm(group_, scaled(products_, Rational(-1)), values_.size());
}

std::complex<double> FiniteQuadraticForm::gauss_sum() const {
  std::complex<double> sum = 0;
  for (const auto& v : values_) {
    double angle = std::numbers::pi * static_cast<double>(v);
    sum += std::polar(1.0, angle);
  }
  return sum;
}

FiniteQuadraticForm discriminant_form(const Lattice& lattice,
                                      DiscriminantFormOptions options) {
  DiscriminantGroup group = discriminant_group(lattice);
  const std::size_t r = group.length();
  RatMatrix g = to_rational(lattice.gram());
  RatMatrix products(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      products(i, j) = bilinear(g, group.generators[i], group.generators[j]);
  return FiniteQuadraticForm(std::move(group), std::move(products),
                             options.max_elements);
}

int gauss_signature(const FiniteQuadraticForm& form, double tolerance) {
  std::complex<double> z =
      form.gauss_sum() / std::sqrt(static_cast<double>(form.size()));
  const double eighth = std::numbers::pi / 4.0;
  long s = std::lround(std::arg(z) / eighth);
  s = ((s % 8) + 8) % 8;
  std::complex<double> root = std::polar(1.0, eighth * static_cast<double>(s));
  if (std::abs(z - root) > tolerance) {
    fail(ErrorCode::CheckFailed,
         "normalized Gauss sum is not an 8th root of unity (|z - w| = " +
             std::to_string(std::abs(z - root)) + ")");
  }
  return static_cast<int>(s);
}

}  // namespace eisenlat
