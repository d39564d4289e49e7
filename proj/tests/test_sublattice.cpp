#include <gtest/gtest.h>

#include "eisenlat/sublattice.hpp"
#include "support.hpp"

using namespace eisenlat;
using eisenlat::testing::random_matrix;
using eisenlat::testing::seed_note;
using eisenlat::testing::test_seed;

TEST(Sublattice, IsotropicLineIsItsOwnComplement) {
  Lattice u = standard_lattice("U");
  Sublattice c = orthogonal_complement(u, IntMatrix{{1}, {0}});
  ASSERT_EQ(c.basis.cols(), 1u);
  EXPECT_TRUE(same_span(c.basis, IntMatrix{{1}, {0}}));
  EXPECT_EQ(c.lattice.gram(), (IntMatrix{{0}}));
}

TEST(Sublattice, BlockComplement) {
  Lattice l = lattice_from_expression("U+A2");
  IntMatrix s = {{1, 0}, {0, 1}, {0, 0}, {0, 0}};
  Sublattice c = orthogonal_complement(l, s);
  EXPECT_EQ(c.lattice.rank(), 2u);
  EXPECT_EQ(abs(c.lattice.determinant()), 3);
  EXPECT_EQ(signature(c.lattice), (Signature{0, 2, 0}));
}

TEST(Sublattice, ComplementOfUInK3) {
  Lattice k3 = standard_lattice("L_K3");
  IntMatrix s(22, 2);
  s(0, 0) = 1;
  s(1, 1) = 1;
  Sublattice c = orthogonal_complement(k3, s);
  EXPECT_EQ(c.lattice.rank(), 20u);
  EXPECT_EQ(abs(c.lattice.determinant()), 1);
  EXPECT_EQ(signature(c.lattice), (Signature{2, 18, 0}));
}

TEST(Sublattice, Saturation) {
  Lattice u = standard_lattice("U");
  IntMatrix two_e = {{2}, {0}};
  EXPECT_FALSE(is_primitive(u, two_e));
  EXPECT_TRUE(same_span(saturation(u, two_e), IntMatrix{{1}, {0}}));
  EXPECT_TRUE(is_primitive(u, IntMatrix{{1}, {1}}));
  EXPECT_THROW(saturation(u, IntMatrix{{1, 2}, {1, 2}}), Error);
  EXPECT_THROW(orthogonal_complement(u, IntMatrix{{1, 2}, {1, 2}}), Error);
}

TEST(Sublattice, RandomComplementProperties) {
  std::mt19937_64 rng(test_seed() + 20);
  Lattice l = lattice_from_expression("U+U(3)+A2+E6");
  const std::size_t n = l.rank();
  std::uniform_int_distribution<std::size_t> k(1, 5);
  for (int t = 0; t < 60; ++t) {
    IntMatrix s = random_matrix(rng, n, k(rng), 4);
    if (rank(s) != s.cols()) continue;
    SCOPED_TRACE(seed_note() + " trial " + std::to_string(t));
    Sublattice c = orthogonal_complement(l, s);
    // orthogonality
    EXPECT_EQ(s.transpose() * l.gram() * c.basis, IntMatrix(s.cols(), c.basis.cols()));
    EXPECT_TRUE(is_primitive(l, c.basis));
    const Lattice sl = induced_lattice(l, s);
    if (!sl.is_degenerate()) EXPECT_EQ(s.cols() + c.basis.cols(), n);
    // S is inside its double complement, with equality when S is saturated
    Sublattice cc = orthogonal_complement(l, c.basis);
    IntMatrix sat = saturation(l, s);
    if (!sl.is_degenerate()) EXPECT_TRUE(same_span(cc.basis, sat));
    IntMatrix joined(n, cc.basis.cols() + s.cols());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < cc.basis.cols(); ++j) joined(i, j) = cc.basis(i, j);
      for (std::size_t j = 0; j < s.cols(); ++j) joined(i, cc.basis.cols() + j) = s(i, j);
    }
    EXPECT_EQ(rank(joined), cc.basis.cols());
  }
}
