#include "eisenlat/sublattice.hpp"

#include "eisenlat/smith.hpp"

namespace eisenlat {

namespace {

void require_independent(const Lattice& lattice, const IntMatrix& s_basis) {
  if (s_basis.rows() != lattice.rank())
    fail(ErrorCode::RankMismatch, "vectors do not live in the ambient lattice");
  if (rank(s_basis) != s_basis.cols())
    fail(ErrorCode::DependentInput, "input vectors are linearly dependent");
}

}  // namespace

Sublattice orthogonal_complement(const Lattice& lattice, const IntMatrix& s_basis) {
  require_independent(lattice, s_basis);
  IntMatrix pairing = s_basis.transpose() * lattice.gram();
  IntMatrix kernel = s_basis.cols() == 0 ? IntMatrix::identity(lattice.rank())
                                         : integer_kernel(pairing);
  return {kernel, induced_lattice(lattice, kernel)};
}

IntMatrix saturation(const Lattice& lattice, const IntMatrix& s_basis) {
  require_independent(lattice, s_basis);
  return saturate_columns(s_basis);
}

bool is_primitive(const Lattice& lattice, const IntMatrix& s_basis) {
  require_independent(lattice, s_basis);
  auto s = smith_normal_form(s_basis);
  for (std::size_t i = 0; i < s_basis.cols(); ++i)
    if (s.diagonal(i, i) != 1) return false;
  return true;
}

bool same_span(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return false;
  const std::size_t ra = rank(a), rb = rank(b);
  if (ra != rb) return false;
  // Each span contains the other iff stacking does not enlarge either.
  IntMatrix both(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) both(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) both(i, a.cols() + j) = b(i, j);
  }
  auto index = [](const IntMatrix& m) {
    auto s = smith_normal_form(m);
    Integer p = 1;
    for (std::size_t i = 0; i < s.rank(); ++i) p *= s.diagonal(i, i);
    return p;
  };
  if (rank(both) != ra) return false;
  Integer ib = index(both);
  return index(a) == ib && index(b) == ib;
}

}  // namespace eisenlat
