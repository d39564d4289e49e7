// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "eisenlat/classification.hpp"
#include "eisenlat/discriminant.hpp"
#include "eisenlat/eisenstein.hpp"
#include "eisenlat/enumerate.hpp"
#include "eisenlat/fibration.hpp"
#include "eisenlat/smith.hpp"
#include "support.hpp"

using namespace eisenlat;
namespace et = eisenlat::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int mod8(const Signature& s) {
  return ((static_cast<int>(s.n_plus) - static_cast<int>(s.n_minus)) % 8 + 8) % 8;
}

bool diagonal_chain(const IntMatrix& d) {
  Integer prev = 1;
  bool zero_seen = false;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (i != j && d(i, j) != 0) return false;
      if (i != j) continue;
      if (d(i, i) < 0) return false;
      if (d(i, i) == 0) {
        zero_seen = true;
        continue;
      }
      if (zero_seen || d(i, i) % prev != 0) return false;
      prev = d(i, i);
    }
  return true;
}

Outcome ac1() {
  Outcome o;
  const std::string golden = slurp(std::string(EISENLAT_DATA_DIR) + "/table1.tsv");
  auto rows = enumerate_table1();
  o.require(rows.size() == 24, "row count " + std::to_string(rows.size()));
  o.require(!golden.empty() && table1_tsv(rows) == golden, "TSV differs from golden file");
  return o;
}

Outcome ac2() {
  Outcome o;
  for (const auto& e : table2()) {
    RowReport r = verify_row(e.n, e.k);
    o.require(r.clauses.size() == 7, "clause count");
    for (const auto& c : r.clauses)
      o.require(c.passed, "(" + std::to_string(e.n) + "," + std::to_string(e.k) + ") " + c.name + ": " + c.detail);
  }
  o.require(table2().size() == 24, "table size");
  return o;
}

Outcome ac3() {
  Outcome o;
  for (const auto& t : enumerate_table1()) {
    // both identities in integers, with one genus-g curve and k-1 rational curves
    const int sum_chi = t.k == 0 ? 0 : (2 - 2 * *t.g) + 2 * (t.k - 1);
    const std::string row = "(" + std::to_string(t.n) + "," + std::to_string(t.k) + ")";
    o.require(sum_chi + t.n == 3 * (8 - t.m), row + " first identity");
    o.require(2 * t.n - sum_chi == 6, row + " second identity");
    o.require(lefschetz_check(t.n, t.k, t.g), row + " lefschetz_check");
  }
  return o;
}

Outcome ac4() {
  Outcome o;
  const IntMatrix a2 = {{0, -1}, {1, -1}};
  const IntMatrix uu3 = {{1, 0, 3, 0}, {0, -2, 0, 3}, {-1, 0, -2, 0}, {0, -1, 0, 1}};
  const std::pair<const char*, IntMatrix> cases[] = {{"A2", a2}, {"U+U(3)", uu3}};
  for (const auto& [name, m] : cases) {
    Lattice l = lattice_from_expression(name);
    IsometryCheck c = verify_isometry(l, m);
    o.require(c.valid && c.order == 3u, std::string(name) + " order");
    Isometry rho(l, m);
    o.require(is_fixed_point_free(rho), std::string(name) + " fixed vectors");
    o.require(acts_trivially_on_discriminant(rho), std::string(name) + " discriminant action");
    EModule mod = as_e_module(rho);
    for (std::size_t i = 0; i < l.rank(); ++i)
      for (std::size_t j = 0; j < l.rank(); ++j) {
        IntVector x(l.rank(), Integer(0)), y(l.rank(), Integer(0));
        x[i] = 1;
        y[j] = 1;
        o.require(2 * hermitian_form(mod, x, y).real_part() == Rational(l.gram()(i, j)),
                  std::string(name) + " 2 Re H on basis pair");
      }
  }
  return o;
}

Outcome ac5() {
  Outcome o;
  Lattice k = coxeter_todd_lattice();
  o.require(k.rank() == 12, "rank");
  o.require(k.determinant() == 729, "det " + to_string(k.determinant()));
  o.require(signature(k).is_negative_definite(), "not negative definite");
  bool even = true;
  for (std::size_t i = 0; i < 12; ++i) even = even && k.gram()(i, i) % 2 == 0;
  o.require(even, "odd diagonal");
  o.require(a_invariant(k, 3) == 6 && is_p_elementary(k, 3), "a-invariant");
  for (const char* name : {"E6", "E8", "K12"}) {
    Isometry found = find_order3_isometry(standard_isometry(name).lattice());
    o.require(found.matrix() == standard_isometry(name).matrix(), std::string(name) + " search differs from vendored");
    o.require(is_fixed_point_free(found), std::string(name) + " fixed vectors");
    o.require(acts_trivially_on_discriminant(found), std::string(name) + " discriminant action");
  }
  o.require(is_unimodular_over_E(as_e_module(standard_isometry("K12"))), "K12 not unimodular over E");
  o.require(!rs_exists(6, 6), "rs_exists(6, 6) is true");
  return o;
}

Outcome ac6() {
  Outcome o;
  RowReport r = k12_factor_check();
  for (const auto& c : r.clauses) o.require(c.passed, c.name + ": " + c.detail);
  o.require(r.clauses.size() == 4, "clause count");
  return o;
}

Outcome ac7() {
  Outcome o;
  std::set<std::pair<int, int>> expected, got;
  for (const auto& t : enumerate_table1())
    if (t.k >= 2) expected.insert({t.n, t.k});
  bool six_doubles_rejected = false;
  for (const auto& p : enumerate_profiles()) {
    if (p.config.multiplicities == std::vector<int>(6, 2)) six_doubles_rejected = !p.analysis;
    if (!p.analysis) continue;
    const auto& a = *p.analysis;
    got.insert({a.n, a.k});
    o.require(a.genus == 3 + a.k - a.n, "genus formula");
    o.require(a.euler_sum == 24, "Euler sum");
  }
  o.require(got == expected, "accepted (n,k) set differs from the table rows with k >= 2");
  o.require(six_doubles_rejected, "six double roots accepted");
  return o;
}

Outcome ac8() {
  Outcome o;
  std::mt19937_64 rng(et::test_seed());
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  for (int t = 0; t < 1000 && o.ok; ++t) {
    const std::size_t r = dim(rng), c = dim(rng);
    IntMatrix m = et::random_matrix(rng, r, c, 1000);
    SmithDecomposition s = smith_normal_form(m);
    o.require(s.left * m * s.right == s.diagonal, "U M V != D");
    o.require(abs(determinant(s.left)) == 1 && abs(determinant(s.right)) == 1, "U or V not unimodular");
    o.require(diagonal_chain(s.diagonal), "divisibility chain");
  }
  for (const auto& e : table2())
    for (const auto& name : {e.t, e.n_lattice}) {
      Lattice l = lattice_from_expression(name);
      o.require(gauss_signature(discriminant_form(l)) == mod8(signature(l)), "Milgram on " + name);
    }
  Lattice a2 = standard_lattice("A2"), e6 = standard_lattice("E6");
  auto a2v = enumerate_vectors_of_norm(a2, -2);
  o.require(a2v.size() == 6 && a2v == et::brute_force_norm(a2, -2), "A2 roots");
  auto e6v = enumerate_vectors_of_norm(e6, -2);
  o.require(e6v.size() == 72 && e6v == et::brute_force_norm(e6, -2), "E6 roots");
  auto e8v = enumerate_vectors_of_norm(standard_lattice("E8"), -2);
  o.require(e8v.size() == 240 && e8v == et::e8_roots_from_model(), "E8 roots");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    double limit_s;  // 0: no runtime bound
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"AC1", "fixed-locus table reproduction", 1.0, ac1},
      {"AC2", "lattice table verification", 30.0, ac2},
      {"AC3", "Lefschetz identities", 0.0, ac3},
      {"AC4", "explicit isometries and hermitian form", 0.0, ac4},
      {"AC5", "Coxeter-Todd lattice", 60.0, ac5},
      {"AC6", "K12 factorization invariants", 0.0, ac6},
      {"AC7", "fibration dictionary", 1.0, ac7},
      {"AC8", "property suites", 0.0, ac8},
  };
  std::cout << "seed " << et::test_seed() << '\n';
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.limit_s > 0 && secs >= c.limit_s) {
      o.ok = false;
      o.note = "runtime over " + std::to_string(c.limit_s) + " s";
    }
    if (!o.ok) ++failures;
    std::printf("%s %s: %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                o.ok ? "" : " - ", o.note.c_str());
  }
  return failures == 0 ? 0 : 1;
}
