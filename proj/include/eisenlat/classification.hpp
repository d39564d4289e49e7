#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eisenlat/isometry.hpp"

namespace eisenlat {

// n isolated fixed points, k fixed curves; g is the genus of the curve of
// largest genus (absent for k = 0), m the E-rank of the transcendental part,
// a the length of the discriminant group of the fixed lattice.
struct FixedLocusType {
  int n = 0;
  int k = 0;
  std::optional<int> g;
  int m = 0;
  int a = 0;

  friend bool operator==(const FixedLocusType&, const FixedLocusType&) = default;
};

// g = 3 + k - n (k > 0), m = 10 - n, a = n + 4 - 2k. Throws InvalidArgument
// outside 0 <= n <= 9, 0 <= k <= 6.
FixedLocusType invariants_from_nk(int n, int k);

// Names of the admissibility constraints violated by (n, k); empty iff the
// pair is a row of the fixed-locus table.
std::vector<std::string> table1_violations(int n, int k);
bool in_table1(int n, int k);

// All admissible rows, sorted by (n, k).
std::vector<FixedLocusType> enumerate_table1();

// TSV with header "n k g m a"; an absent g is written "-".
std::string table1_tsv(const std::vector<FixedLocusType>& rows);

// Existence of an even hyperbolic 3-elementary lattice of rank r with
// invariant a. Throws InvalidArgument for r < 2 or a < 0; false for a > r.
bool rs_exists(int r, int a);

struct Table2Entry {
  int n;
  int k;
  std::string t;  // lattice expression for T(n, k)
  std::string n_lattice;  // lattice expression for N(n, k)
};

const std::vector<Table2Entry>& table2();
std::string table2_tsv();

struct LatticePair {
  int n = 0;
  int k = 0;
  Lattice t;
  Lattice n_lattice;
  Isometry rho_t;
};

// T and N from their Table 2 names; rho_t is assembled blockwise from
// standard_isometry. Throws NotInTable.
LatticePair build_pair(int n, int k);

struct Clause {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct RowReport {
  int n = 0;
  int k = 0;
  std::vector<Clause> clauses;

  bool passed() const;
};

// Seven clauses: signature, t-elementary, e-star, n-lattice, glue, e-rank,
// smith. Failed checks are reported, not thrown; NotInTable is thrown.
RowReport verify_row(int n, int k);

// chi(X^sigma) = sum chi(C_i) + n = 3 (8 - m) and 2n - sum chi(C_i) = 6, with
// a genus-g curve plus k - 1 rational curves.
bool lefschetz_check(int n, int k, std::optional<int> g);

// Invariant-level comparison of T(3,0) with A2(-1)+K12: rank, signature,
// a-invariant, Gauss signature of the discriminant form.
RowReport k12_factor_check();

}  // namespace eisenlat
