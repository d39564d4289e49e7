// Regenerates src/vendored_data.cpp.
//
// K12 is built as {x in E^6 : x_i = x_j mod theta, sum x_i = 0 mod 3} with
// the form -(2/3) Re(x conj y), then rewritten in a basis of minimal vectors.
// The isometries are the first solutions of find_order3_isometry.
//
//   gen_vendored > src/vendored_data.cpp

#include <iostream>
#include <sstream>

#include "eisenlat/discriminant.hpp"
#include "eisenlat/enumerate.hpp"
#include "eisenlat/isometry.hpp"
#include "eisenlat/smith.hpp"
#include "eisenlat/standard.hpp"
#include "eisenlat/sublattice.hpp"

using namespace eisenlat;

namespace {

// Coordinates (a_1, b_1, ..., a_6, b_6) for x_i = a_i + b_i zeta.
Lattice congruence_k12() {
  const std::size_t n = 12;
  const std::size_t nc = 7;
  IntMatrix c(nc, n);
  for (std::size_t i = 1; i < 6; ++i) {
    c(i - 1, 2 * i) = 1;
    c(i - 1, 2 * i + 1) = 1;
    c(i - 1, 0) = -1;
    c(i - 1, 1) = -1;
  }
  for (std::size_t i = 0; i < 6; ++i) {
    c(5, 2 * i) = 1;
    c(6, 2 * i + 1) = 1;
  }
  // x with C x = 3 y: kernel of [C | -3 I], projected to x.
  IntMatrix aug(nc, n + nc);
  for (std::size_t r = 0; r < nc; ++r) {
    for (std::size_t j = 0; j < n; ++j) aug(r, j) = c(r, j);
    aug(r, n + r) = -3;
  }
  IntMatrix k = integer_kernel(aug);
  IntMatrix proj(n, k.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) proj(i, j) = k(i, j);
  IntMatrix basis = column_span_basis(proj);

  // 3 * (-(2/3) Re) = A2 on each coordinate
  IntMatrix a2 = standard_lattice("A2").gram();
  IntMatrix q = a2;
  for (int i = 1; i < 6; ++i) q = block_diagonal(q, a2);
  IntMatrix g3 = basis.transpose() * q * basis;
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (floor_mod(g3(i, j), 3) != 0) fail(ErrorCode::CheckFailed, "form is not integral");
      g(i, j) = g3(i, j) / 3;
    }
  return make_lattice(g, "K12");
}

// Greedy lexicographic choice of minimal vectors keeping every partial span
// primitive, with backtracking when the greedy choice dead-ends.
bool extend(const Lattice& l, const std::vector<IntVector>& mins,
            std::vector<IntVector>& chosen, std::size_t start) {
  const std::size_t n = l.rank();
  if (chosen.size() == n) return true;
  for (std::size_t i = start; i < mins.size(); ++i) {
    chosen.push_back(mins[i]);
    IntMatrix b = IntMatrix::from_columns(chosen, n);
    if (rank(b) == chosen.size() && is_primitive(l, b) && extend(l, mins, chosen, i + 1))
      return true;
    chosen.pop_back();
  }
  return false;
}

void emit(std::ostream& out, const char* name, const IntMatrix& m) {
  out << "const std::int64_t k" << name << "[] = {\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "    ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << to_string(m(i, j)) << ",";
      if (j + 1 < m.cols()) out << " ";
    }
    out << "\n";
  }
  out << "};\n\n";
}

}  // namespace

int main() {
  Lattice raw = congruence_k12();
  auto mins = enumerate_vectors_of_norm(raw, -4);
  std::cerr << "K12: det " << to_string(raw.determinant()) << ", " << mins.size()
            << " minimal vectors\n";
  std::vector<IntVector> chosen;
  if (!extend(raw, mins, chosen, 0)) {
    std::cerr << "no primitive basis of minimal vectors\n";
    return 1;
  }
  IntMatrix p = IntMatrix::from_columns(chosen, 12);
  Lattice k12 = induced_lattice(raw, p, "K12");
  if (k12.determinant() != 729 || a_invariant(k12, 3) != 6) {
    std::cerr << "basis change failed\n";
    return 1;
  }

  Isometry e6 = find_order3_isometry(standard_lattice("E6"));
  std::cerr << "E6 done\n";
  Isometry e8 = find_order3_isometry(standard_lattice("E8"));
  std::cerr << "E8 done\n";
  Isometry k = find_order3_isometry(k12);
  std::cerr << "K12 done\n";

  std::ostringstream out;
  out << "// Generated by tools/gen_vendored.cpp; do not edit.\n"
         "#include \"eisenlat/vendored.hpp\"\n\n"
         "namespace eisenlat::vendored {\n\nnamespace {\n\n";
  emit(out, "K12Gram", k12.gram());
  emit(out, "E6Isometry", e6.matrix());
  emit(out, "E8Isometry", e8.matrix());
  emit(out, "K12Isometry", k.matrix());
  out << "}  // namespace\n\n"
         "std::span<const std::int64_t> k12_gram() { return kK12Gram; }\n"
         "std::span<const std::int64_t> e6_isometry() { return kE6Isometry; }\n"
         "std::span<const std::int64_t> e8_isometry() { return kE8Isometry; }\n"
         "std::span<const std::int64_t> k12_isometry() { return kK12Isometry; }\n\n"
         "}  // namespace eisenlat::vendored\n";
  std::cout << out.str();
}
