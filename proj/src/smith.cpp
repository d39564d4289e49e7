#include "eisenlat/smith.hpp"

#include <optional>
#include <utility>

namespace eisenlat {

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t k = std::min(diagonal.rows(), diagonal.cols());
  while (r < k && diagonal(r, r) != 0) ++r;
  return r;
}

IntVector SmithDecomposition::invariant_factors() const {
  IntVector d;
  const std::size_t k = std::min(diagonal.rows(), diagonal.cols());
  for (std::size_t i = 0; i < k; ++i) d.push_back(diagonal(i, i));
  return d;
}

namespace {

struct Reducer {
  IntMatrix a, u, v, uinv;

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
    uinv.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
  }
  // row[dst] += f * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    a.add_row_multiple(dst, src, f);
    u.add_row_multiple(dst, src, f);
    uinv.add_col_multiple(src, dst, Integer(-f));
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    a.add_col_multiple(dst, src, f);
    v.add_col_multiple(dst, src, f);
  }
  void negate_row(std::size_t i) {
    a.negate_row(i);
    u.negate_row(i);
    uinv.negate_col(i);
  }

  // Smallest nonzero |entry| in the trailing block starting at (t, t); first
  // in row-major order on ties.
  std::optional<std::pair<std::size_t, std::size_t>> pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        if (a(i, j) == 0) continue;
        Integer m = abs(a(i, j));
        if (!best || m < best_abs) {
          best = {i, j};
          best_abs = m;
          if (best_abs == 1) return best;
        }
      }
    return best;
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  Reducer r{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()),
            IntMatrix::identity(m.rows())};
  const std::size_t k = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < k; ++t) {
    bool settled = false;
    while (!settled) {
      auto p = r.pivot(t);
      if (!p) break;
      r.swap_rows(t, p->first);
      r.swap_cols(t, p->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < r.a.rows(); ++i) {
        if (r.a(i, t) == 0) continue;
        Integer q = floor_div(r.a(i, t), r.a(t, t));
        r.add_row(i, t, Integer(-q));
        if (r.a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < r.a.cols(); ++j) {
        if (r.a(t, j) == 0) continue;
        Integer q = floor_div(r.a(t, j), r.a(t, t));
        r.add_col(j, t, Integer(-q));
        if (r.a(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // a strictly smaller remainder becomes the pivot

      // Enforce the divisibility chain: fold an offending row into row t.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < r.a.rows() && !bad_row; ++i)
        for (std::size_t j = t + 1; j < r.a.cols(); ++j)
          if (floor_mod(r.a(i, j), r.a(t, t)) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row) {
        r.add_row(t, *bad_row, Integer(1));
        continue;
      }
      settled = true;
    }
    if (r.a(t, t) < 0) r.negate_row(t);
  }
  return {std::move(r.a), std::move(r.u), std::move(r.v), std::move(r.uinv)};
}

IntMatrix integer_kernel(const IntMatrix& m) {
  SmithDecomposition s = smith_normal_form(m);
  const std::size_t r = s.rank();
  IntMatrix basis(m.cols(), m.cols() - r);
  for (std::size_t j = r; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) basis(i, j - r) = s.right(i, j);
  return basis;
}

IntMatrix column_span_basis(const IntMatrix& generators) {
  SmithDecomposition s = smith_normal_form(generators);
  const std::size_t r = s.rank();
  IntMatrix basis(generators.rows(), r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < generators.rows(); ++i)
      basis(i, j) = s.left_inverse(i, j) * s.diagonal(j, j);
  return basis;
}

IntMatrix saturate_columns(const IntMatrix& generators) {
  SmithDecomposition s = smith_normal_form(generators);
  const std::size_t r = s.rank();
  IntMatrix basis(generators.rows(), r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < generators.rows(); ++i)
      basis(i, j) = s.left_inverse(i, j);
  return basis;
}

}  // namespace eisenlat
