#include <gtest/gtest.h>

#include "eisenlat/classification.hpp"
#include "eisenlat/eisenstein.hpp"
#include "support.hpp"

using namespace eisenlat;
using eisenlat::testing::random_matrix;
using eisenlat::testing::seed_note;
using eisenlat::testing::test_seed;

namespace {

std::vector<Isometry> all_modules() {
  std::vector<Isometry> out;
  for (const char* name : {"A2", "A2(-1)", "U+U(3)", "U+U", "E6", "E8", "K12"})
    out.push_back(standard_isometry(name));
  for (const auto& e : table2()) out.push_back(build_pair(e.n, e.k).rho_t);
  return out;
}

IntVector column(const IntMatrix& m, std::size_t j) {
  IntVector v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

}  // namespace

TEST(EisNum, Arithmetic) {
  const EisNum z = EisNum::zeta();
  EXPECT_EQ(z * z, (EisNum{-1, -1}));
  EXPECT_EQ(z * z * z, (EisNum{1, 0}));
  EXPECT_TRUE((EisNum{1, 0} + z + z * z).is_zero());
  EXPECT_EQ(EisNum::theta() * EisNum::theta(), (EisNum{-3, 0}));
  EXPECT_EQ(z.conj(), z * z);
  EXPECT_EQ(EisNum::theta().norm(), 3);
  EXPECT_EQ((EisNum{2, 3}) * (EisNum{2, 3}).conj(), (EisNum{(EisNum{2, 3}).norm(), 0}));
  EisNum x{Rational(1, 2), 5};
  EXPECT_EQ(x * x.inverse(), (EisNum{1, 0}));
  EXPECT_TRUE((EisNum{3, -4}).is_integral());
  EXPECT_FALSE((EisNum{Rational(1, 3), 0}).is_integral());
  EXPECT_EQ((EisNum{2, 4}).real_part(), 0);
}

TEST(Eisenstein, A2HasUnitHermitianNorm) {
  EModule m = as_e_module(standard_isometry("A2"));
  ASSERT_EQ(m.e_rank(), 1u);
  EXPECT_EQ(hermitian_form(m, m.e_basis[0], m.e_basis[0]), (EisNum{-1, 0}));
  EXPECT_TRUE(is_unimodular_over_E(m));
}

TEST(Eisenstein, ERanks) {
  EXPECT_EQ(as_e_module(standard_isometry("A2")).e_rank(), 1u);
  EXPECT_EQ(as_e_module(standard_isometry("U+U(3)")).e_rank(), 2u);
  EXPECT_EQ(as_e_module(standard_isometry("E8")).e_rank(), 4u);
  EXPECT_EQ(as_e_module(standard_isometry("K12")).e_rank(), 6u);
}

TEST(Eisenstein, EBasisIsZBasis) {
  for (const auto& rho : all_modules()) {
    EModule m = as_e_module(rho);
    EXPECT_EQ(abs(determinant(m.z_basis())), 1) << rho.lattice().name();
  }
}

TEST(Eisenstein, RealPartRecoversBilinearForm) {
  for (const auto& rho : all_modules()) {
    EModule m = as_e_module(rho);
    const IntMatrix& g = m.lattice.gram();
    const std::size_t n = m.lattice.rank();
    SCOPED_TRACE(m.lattice.name());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        IntVector x(n, Integer(0)), y(n, Integer(0));
        x[i] = 1;
        y[j] = 1;
        ASSERT_EQ(2 * hermitian_form(m, x, y).real_part(), Rational(g(i, j)));
      }
  }
}

TEST(Eisenstein, HermitianContractOnRandomVectors) {
  std::mt19937_64 rng(test_seed() + 50);
  for (const auto& rho : all_modules()) {
    EModule m = as_e_module(rho);
    const std::size_t n = m.lattice.rank();
    SCOPED_TRACE(m.lattice.name() + " " + seed_note());
    for (int t = 0; t < 8; ++t) {
      IntMatrix xy = random_matrix(rng, n, 2, 5);
      IntVector x = column(xy, 0), y = column(xy, 1);
      const EisNum h = hermitian_form(m, x, y);
      EXPECT_EQ(hermitian_form(m, y, x), h.conj());
      EXPECT_EQ(hermitian_form(m, m.rho.apply(x), m.rho.apply(y)), h);
      EXPECT_EQ(hermitian_form(m, m.rho.apply(x), y), EisNum::zeta() * h);
      EXPECT_TRUE((EisNum::theta() * h).is_integral());
      EXPECT_TRUE(hermitian_form(m, x, x).is_real());
      EXPECT_EQ(2 * h.real_part(), Rational(bilinear(m.lattice.gram(), x, y)));
    }
  }
}

TEST(Eisenstein, DeterminantsMatchZDeterminant) {
  for (const auto& rho : all_modules()) {
    EModule m = as_e_module(rho);
    EisNum d = determinant(hermitian_gram(m));
    SCOPED_TRACE(m.lattice.name());
    EXPECT_TRUE(d.is_real());
    Rational lhs = d.norm();
    for (std::size_t i = 0; i < m.e_rank(); ++i) lhs *= 3;
    EXPECT_EQ(lhs, Rational(abs(m.lattice.determinant())));
  }
}

TEST(Eisenstein, Unimodularity) {
  EXPECT_TRUE(is_unimodular_over_E(as_e_module(standard_isometry("K12"))));
  EXPECT_TRUE(is_unimodular_over_E(as_e_module(standard_isometry("A2"))));
  EXPECT_TRUE(is_unimodular_over_E(as_e_module(standard_isometry("U+U(3)"))));
  Isometry a2 = standard_isometry("A2");
  Isometry a2_3(twist(a2.lattice(), 3), a2.matrix());
  EXPECT_FALSE(is_unimodular_over_E(as_e_module(a2_3)));
}

TEST(Eisenstein, ModuleErrors) {
  auto code_of = [](const Isometry& rho) {
    try {
      as_e_module(rho);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::CheckFailed;
  };
  Isometry mixed = direct_sum(standard_isometry("A2"), identity_isometry(standard_lattice("A2")));
  EXPECT_EQ(code_of(mixed), ErrorCode::HasFixedVectors);
  Isometry odd = direct_sum(standard_isometry("A2"), identity_isometry(standard_lattice("A1")));
  EXPECT_EQ(code_of(odd), ErrorCode::OddRank);
  Isometry minus(standard_lattice("A2"), scaled(IntMatrix::identity(2), Integer(-1)));
  EXPECT_EQ(code_of(minus), ErrorCode::WrongOrder);
}

TEST(Eisenstein, ToString) {
  EXPECT_EQ(to_string(EisNum{-1, 0}), "(-1)+(0)z");
  EXPECT_EQ(to_string(EisNum{Rational(1, 3), 2}), "(1/3)+(2)z");
}
