#include "eisenlat/eisenstein.hpp"

#include <algorithm>
#include <optional>

namespace eisenlat {

bool EisNum::is_integral() const { return eisenlat::is_integral(a) && eisenlat::is_integral(b); }

EisNum EisNum::inverse() const {
  Rational n = norm();
  if (n == 0) fail(ErrorCode::InvalidArgument, "inverse of zero in Q(zeta)");
  EisNum c = conj();
  return {c.a / n, c.b / n};
}

std::string to_string(const EisNum& z) {
  return "(" + to_string(z.a) + ")+(" + to_string(z.b) + ")z";
}

IntMatrix EModule::z_basis() const {
  std::vector<IntVector> cols;
  for (const auto& b : e_basis) {
    cols.push_back(b);
    cols.push_back(rho.apply(b));
  }
  return IntMatrix::from_columns(cols, lattice.rank());
}

namespace {

// Euclidean quotient in Z[zeta]: round both coordinates of x / y.
EisNum eis_quotient(const EisNum& x, const EisNum& y) {
  EisNum q = x / y;
  return {Rational(round_nearest(q.a)), Rational(round_nearest(q.b))};
}

// E-coefficients lambda with x = sum lambda_i b_i, from Z-coordinates in the
// basis b_1, rho b_1, ...: lambda_i = alpha_i + beta_i zeta.
std::vector<EisNum> to_e_coordinates(const RatVector& z_coords) {
  std::vector<EisNum> out;
  for (std::size_t i = 0; i + 1 < z_coords.size(); i += 2)
    out.emplace_back(z_coords[i], z_coords[i + 1]);
  return out;
}

// Replaces a greedy E-basis that spans a proper sublattice by an E-basis of
// the whole lattice: column reduction over the Euclidean ring Z[zeta] of the
// E-coordinates of the standard basis vectors.
std::vector<IntVector> repair_e_basis(const Isometry& rho,
                                      const std::vector<IntVector>& greedy) {
  const std::size_t n = rho.lattice().rank();
  const std::size_t m = greedy.size();
  std::vector<IntVector> zcols;
  for (const auto& b : greedy) {
    zcols.push_back(b);
    zcols.push_back(rho.apply(b));
  }
  RatMatrix binv = inverse(to_rational(IntMatrix::from_columns(zcols, n)));

  // columns[j] = E-coordinates of e_j, scaled to integrality by `scale`.
  std::vector<std::vector<EisNum>> columns;
  Integer scale = 1;
  for (std::size_t j = 0; j < n; ++j) {
    columns.push_back(to_e_coordinates(binv.column(j)));
    for (const auto& z : columns.back()) {
      scale = boost::multiprecision::lcm(scale, denominator(z.a));
      scale = boost::multiprecision::lcm(scale, denominator(z.b));
    }
  }
  const EisNum s{Rational(scale), 0};
  for (auto& col : columns)
    for (auto& z : col) z = z * s;

  for (std::size_t r = 0; r < m; ++r) {
    while (true) {
      std::optional<std::size_t> piv;
      for (std::size_t c = r; c < columns.size(); ++c) {
        if (columns[c][r].is_zero()) continue;
        if (!piv || columns[c][r].norm() < columns[*piv][r].norm()) piv = c;
      }
      if (!piv) fail(ErrorCode::CheckFailed, "E-coordinates have deficient rank");
      std::swap(columns[r], columns[*piv]);
      bool cleared = true;
      for (std::size_t c = r + 1; c < columns.size(); ++c) {
        if (columns[c][r].is_zero()) continue;
        EisNum q = eis_quotient(columns[c][r], columns[r][r]);
        for (std::size_t k = 0; k < m; ++k) columns[c][k] = columns[c][k] - q * columns[r][k];
        if (!columns[c][r].is_zero()) cleared = false;
      }
      if (cleared) break;
    }
  }

  std::vector<IntVector> basis;
  for (std::size_t r = 0; r < m; ++r) {
    RatVector x(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      const EisNum lambda = columns[r][i] / s;
      const IntVector rb = rho.apply(greedy[i]);
      for (std::size_t k = 0; k < n; ++k)
        x[k] += lambda.a * Rational(greedy[i][k]) + lambda.b * Rational(rb[k]);
    }
    IntVector xi;
    for (const auto& v : x) {
      if (!is_integral(v)) fail(ErrorCode::CheckFailed, "repaired E-basis vector is not integral");
      xi.push_back(numerator(v));
    }
    basis.push_back(std::move(xi));
  }
  return basis;
}

}  // namespace

EModule as_e_module(const Isometry& rho) {
  const Lattice& l = rho.lattice();
  const std::size_t n = l.rank();
  if (n % 2 != 0) fail(ErrorCode::OddRank, "E-lattices have even rank");
  const IntMatrix& m = rho.matrix();
  if (m * m * m != IntMatrix::identity(n))
    fail(ErrorCode::WrongOrder, "isometry is not of order dividing 3");
  if (!is_fixed_point_free(rho)) fail(ErrorCode::HasFixedVectors, "isometry has fixed vectors");

  std::vector<IntVector> greedy;
  std::vector<IntVector> span;
  for (std::size_t j = 0; j < n && span.size() < n; ++j) {
    IntVector e(n, Integer(0));
    e[j] = 1;
    std::vector<IntVector> trial = span;
    trial.push_back(e);
    if (rank(IntMatrix::from_columns(trial, n)) == span.size()) continue;
    greedy.push_back(e);
    span.push_back(e);
    span.push_back(rho.apply(e));
  }

  EModule module{l, rho, greedy};
  Integer det = determinant(module.z_basis());
  if (det != 1 && det != -1) {
    module.e_basis = repair_e_basis(rho, greedy);
    det = determinant(module.z_basis());
    if (det != 1 && det != -1)
      fail(ErrorCode::CheckFailed, "E-basis repair did not produce a Z-basis");
  }
  return module;
}

EisNum hermitian_form(const EModule& module, const IntVector& x, const IntVector& y) {
  const Lattice& l = module.lattice;
  const IntVector ry = module.rho.apply(y);
  const IntVector r2y = module.rho.apply(ry);
  IntVector diff(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) diff[i] = r2y[i] - ry[i];
  const Rational p(l.inner(x, y));
  const Rational s(l.inner(x, diff));
  // 1/2 [p - (1 + 2 zeta) s / 3]
  EisNum h{p / 2 - s / 6, -s / 3};
  if (!(EisNum::theta() * h).is_integral())
    fail(ErrorCode::NonIntegralHermitian, "theta * H(x, y) = " +
                                              to_string(EisNum::theta() * h) +
                                              " is not in Z[zeta]");
  return h;
}

EisMatrix hermitian_gram(const EModule& module) {
  const std::size_t m = module.e_rank();
  EisMatrix h(m, std::vector<EisNum>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      h[i][j] = hermitian_form(module, module.e_basis[i], module.e_basis[j]);
  return h;
}

EisNum determinant(const EisMatrix& input) {
  EisMatrix a = input;
  const std::size_t n = a.size();
  EisNum det{1, 0};
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k].is_zero()) ++p;
    if (p == n) return {};
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det = det * a[k][k];
    const EisNum inv = a[k][k].inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      const EisNum f = a[i][k] * inv;
      for (std::size_t j = k; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
    }
  }
  return det;
}

bool is_unimodular_over_E(const EModule& module) {
  return determinant(hermitian_gram(module)).norm() == 1;
}

}  // namespace eisenlat
