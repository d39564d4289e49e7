#include <gtest/gtest.h>

#include "eisenlat/enumerate.hpp"
#include "support.hpp"

using namespace eisenlat;
using eisenlat::testing::brute_force_norm;
using eisenlat::testing::congruent;
using eisenlat::testing::e8_roots_from_model;
using eisenlat::testing::random_unimodular;
using eisenlat::testing::seed_note;
using eisenlat::testing::test_seed;

TEST(Enumerate, A2Roots) {
  Lattice a2 = standard_lattice("A2");
  auto v = enumerate_vectors_of_norm(a2, -2);
  EXPECT_EQ(v.size(), 6u);
  EXPECT_EQ(v, brute_force_norm(a2, -2));
}

TEST(Enumerate, E8RootsMatchCoordinateModel) {
  auto model = e8_roots_from_model();
  ASSERT_EQ(model.size(), 240u);
  EXPECT_EQ(enumerate_vectors_of_norm(standard_lattice("E8"), -2), model);
}

TEST(Enumerate, E6RootsMatchCoordinateModel) {
  // E6 roots are the E8 roots supported on the first six simple roots.
  std::vector<IntVector> expected;
  for (const auto& r : e8_roots_from_model())
    if (r[6] == 0 && r[7] == 0) expected.push_back(IntVector(r.begin(), r.begin() + 6));
  ASSERT_EQ(expected.size(), 72u);
  EXPECT_EQ(enumerate_vectors_of_norm(standard_lattice("E6"), -2), expected);
}

TEST(Enumerate, ParityAndSign) {
  Lattice e8 = standard_lattice("E8");
  EXPECT_TRUE(enumerate_vectors_of_norm(e8, -3).empty());
  EXPECT_TRUE(enumerate_vectors_of_norm(e8, 2).empty());
  auto zero = enumerate_vectors_of_norm(e8, 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0], IntVector(8, Integer(0)));
  EXPECT_EQ(enumerate_vectors_of_norm(standard_lattice("A2(-1)"), 2).size(), 6u);
  EXPECT_EQ(enumerate_vectors_of_norm(standard_lattice("E8"), -4).size(), 2160u);
  EXPECT_EQ(enumerate_vectors_of_norm(standard_lattice("K12"), -4).size(), 756u);
}

TEST(Enumerate, Errors) {
  EXPECT_THROW(enumerate_vectors_of_norm(standard_lattice("U"), 0), Error);
  EXPECT_THROW(enumerate_vectors_of_norm(standard_lattice("E8"), -4, {100}), Error);
}

TEST(Enumerate, OutputIsSorted) {
  auto v = enumerate_vectors_of_norm(standard_lattice("D4"), -4);
  EXPECT_TRUE(std::is_sorted(v.begin(), v.end(), lex_less));
}

// Seeded rank <= 4 definite lattices against a full-box brute force.
TEST(Enumerate, RandomSmallLatticesMatchBruteForce) {
  std::mt19937_64 rng(test_seed() + 30);
  const char* bases[] = {"A1", "A2", "A3", "D4", "A2+A2", "A1+A2", "A2(-1)", "A1+A1(3)", "A4"};
  std::uniform_int_distribution<int> norm(1, 4);
  for (const char* name : bases) {
    Lattice base = lattice_from_expression(name);
    for (int t = 0; t < 6; ++t) {
      Lattice l = congruent(base, random_unimodular(rng, base.rank(), 6));
      const int sign = signature(l).is_negative_definite() ? -1 : 1;
      const Integer nu = sign * 2 * norm(rng);
      SCOPED_TRACE(std::string(name) + " norm " + to_string(nu) + " " + seed_note());
      EXPECT_EQ(enumerate_vectors_of_norm(l, nu), brute_force_norm(l, nu));
    }
  }
}
