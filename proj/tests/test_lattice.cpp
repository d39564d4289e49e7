#include <gtest/gtest.h>

#include "eisenlat/discriminant.hpp"
#include "eisenlat/standard.hpp"
#include "support.hpp"

using namespace eisenlat;
using eisenlat::testing::congruent;
using eisenlat::testing::random_unimodular;
using eisenlat::testing::seed_note;
using eisenlat::testing::test_seed;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::CheckFailed;
}

}  // namespace

TEST(Lattice, MakeLattice) {
  Lattice u = make_lattice(IntMatrix{{0, 1}, {1, 0}}, "U");
  EXPECT_EQ(u.rank(), 2u);
  EXPECT_EQ(u.determinant(), -1);
  EXPECT_EQ(make_lattice(IntMatrix{{-2, 1}, {1, -2}}).gram(), standard_lattice("A2").gram());
  EXPECT_EQ(code_of([] { make_lattice(IntMatrix{{1, 0}, {0, 1}}); }), ErrorCode::NotEven);
  EXPECT_EQ(code_of([] { make_lattice(IntMatrix{{0, 1}, {2, 0}}); }), ErrorCode::NotSymmetric);
  EXPECT_TRUE(make_lattice(IntMatrix{{0, 0}, {0, 0}}).is_degenerate());
}

TEST(Lattice, StandardNames) {
  Lattice u3 = standard_lattice("U", Integer(3));
  EXPECT_EQ(u3.gram(), (IntMatrix{{0, 3}, {3, 0}}));
  EXPECT_EQ(a_invariant(u3, 3), 2u);

  Lattice e8 = standard_lattice("E8");
  EXPECT_EQ(e8.rank(), 8u);
  EXPECT_EQ(e8.determinant(), 1);
  EXPECT_EQ(signature(e8), (Signature{0, 8, 0}));

  Lattice k12 = standard_lattice("K12");
  EXPECT_EQ(k12.rank(), 12u);
  EXPECT_EQ(abs(k12.determinant()), 729);
  EXPECT_EQ(a_invariant(k12, 3), 6u);

  EXPECT_EQ(standard_lattice("A3").determinant(), -4);
  EXPECT_EQ(standard_lattice("D4").determinant(), 4);
  EXPECT_EQ(standard_lattice("E6").determinant(), 3);
  EXPECT_EQ(standard_lattice("E7").determinant(), -2);
  EXPECT_EQ(code_of([] { standard_lattice("F4"); }), ErrorCode::UnknownName);
}

TEST(Lattice, DirectSum) {
  Lattice s = direct_sum(standard_lattice("U"), standard_lattice("U", Integer(3)));
  EXPECT_EQ(s.rank(), 4u);
  EXPECT_EQ(s.determinant(), 9);
  Lattice a2 = standard_lattice("A2");
  EXPECT_EQ(direct_sum(a2, make_lattice(IntMatrix(0, 0))), a2);

  Lattice k3 = standard_lattice("L_K3");
  EXPECT_EQ(k3.rank(), 22u);
  EXPECT_EQ(k3.determinant(), -1);
  EXPECT_EQ(signature(k3), (Signature{3, 19, 0}));
  EXPECT_EQ(k3, lattice_from_expression("U+U+U+E8+E8"));
}

TEST(Lattice, Twist) {
  EXPECT_EQ(twist(standard_lattice("U"), 3), standard_lattice("U(3)"));
  Lattice a2m = twist(standard_lattice("A2"), -1);
  EXPECT_TRUE(signature(a2m).is_positive_definite());
  EXPECT_EQ(a2m, standard_lattice("A2(-1)"));
  EXPECT_EQ(twist(standard_lattice("E6"), 1), standard_lattice("E6"));
  EXPECT_EQ(code_of([] { twist(standard_lattice("U"), 0); }), ErrorCode::ZeroScale);
}

TEST(Lattice, DualScaled) {
  Lattice e6s = dual_scaled(standard_lattice("E6"), 3);
  EXPECT_EQ(a_invariant(e6s, 3), 5u);
  EXPECT_EQ(e6s.gram(), standard_lattice("E6*(3)").gram());

  Lattice u3 = standard_lattice("U(3)");
  Lattice d = dual_scaled(u3, 3);
  EXPECT_EQ(discriminant_group(d).invariant_factors, IntVector{});
  EXPECT_EQ(signature(d), signature(u3));

  EXPECT_EQ(dual_scaled(standard_lattice("U"), 3).gram(), (IntMatrix{{0, 3}, {3, 0}}));
  EXPECT_EQ(code_of([] { dual_scaled(standard_lattice("A2"), 1); }), ErrorCode::NonIntegralScale);
  EXPECT_EQ(code_of([] { dual_scaled(make_lattice(IntMatrix(2, 2)), 3); }),
            ErrorCode::DegenerateForm);
}

TEST(Lattice, Expressions) {
  Lattice t = lattice_from_expression("U+U(3)+E8+E8");
  EXPECT_EQ(t.rank(), 20u);
  EXPECT_EQ(signature(t), (Signature{2, 18, 0}));
  EXPECT_EQ(lattice_from_expression("U⊕A2^2"), lattice_from_expression("U+A2+A2"));
  EXPECT_EQ(signature(standard_lattice("A2(-1)")), (Signature{2, 0, 0}));
  EXPECT_EQ(signature(standard_lattice("U")), (Signature{1, 1, 0}));
  EXPECT_THROW(lattice_from_expression("U+"), Error);
  EXPECT_THROW(lattice_from_expression("Q7"), Error);
}

TEST(Lattice, SignatureZeroDiagonal) {
  // only off-diagonal entries: needs the hyperbolic split
  Lattice h = make_lattice(IntMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  EXPECT_EQ(signature(h), (Signature{1, 2, 0}));
  Lattice z = make_lattice(IntMatrix{{0, 0, 0}, {0, -2, 0}, {0, 0, 0}});
  EXPECT_EQ(signature(z), (Signature{0, 1, 2}));
}

TEST(Lattice, SignatureInvariantUnderCongruence) {
  std::mt19937_64 rng(test_seed() + 10);
  const char* names[] = {"U+U(3)+E8+E8", "U+A2^5", "U(3)+E6*(3)", "A2(-1)+K12", "U+U+E6+E6", "D4+U"};
  for (const char* name : names) {
    Lattice l = lattice_from_expression(name);
    const Signature s = signature(l);
    for (int t = 0; t < 20; ++t) {
      IntMatrix p = random_unimodular(rng, l.rank(), 30);
      SCOPED_TRACE(std::string(name) + " " + seed_note());
      ASSERT_EQ(signature(congruent(l, p)), s);
    }
  }
}
