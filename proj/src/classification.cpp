#include "eisenlat/classification.hpp"

#include <algorithm>
#include <sstream>

#include "eisenlat/discriminant.hpp"
#include "eisenlat/eisenstein.hpp"
#include "eisenlat/standard.hpp"

namespace eisenlat {

FixedLocusType invariants_from_nk(int n, int k) {
  if (n < 0 || n > 9 || k < 0 || k > 6)
    fail(ErrorCode::InvalidArgument, "(n, k) outside [0,9] x [0,6]");
  FixedLocusType t;
  t.n = n;
  t.k = k;
  if (k > 0) t.g = 3 + k - n;
  t.m = 10 - n;
  t.a = n + 4 - 2 * k;
  return t;
}

std::vector<std::string> table1_violations(int n, int k) {
  const FixedLocusType t = invariants_from_nk(n, k);
  std::vector<std::string> out;
  if (k == 0 && n != 3) out.push_back("k = 0 requires n = 3");
  if (k > 0 && *t.g < 0) out.push_back("g >= 0");
  if (t.a < 0) out.push_back("a >= 0");
  if (t.a > std::min(t.m, 22 - 2 * t.m)) out.push_back("a <= min(m, 22 - 2m)");
  if ((t.a == 0 || t.a == 22 - 2 * t.m) && t.m % 4 != 2)
    out.push_back("a = 0 or a = 22 - 2m implies m = 2 mod 4");
  return out;
}

bool in_table1(int n, int k) {
  if (n < 0 || n > 9 || k < 0 || k > 6) return false;
  return table1_violations(n, k).empty();
}

std::vector<FixedLocusType> enumerate_table1() {
  std::vector<FixedLocusType> rows;
  for (int n = 0; n <= 9; ++n)
    for (int k = 0; k <= 6; ++k)
      if (in_table1(n, k)) rows.push_back(invariants_from_nk(n, k));
  return rows;
}

std::string table1_tsv(const std::vector<FixedLocusType>& rows) {
  std::ostringstream out;
  out << "n\tk\tg\tm\ta\n";
  for (const auto& r : rows) {
    out << r.n << '\t' << r.k << '\t';
    if (r.g)
      out << *r.g;
    else
      out << '-';
    out << '\t' << r.m << '\t' << r.a << '\n';
  }
  return out.str();
}

bool rs_exists(int r, int a) {
  if (r < 2 || a < 0) fail(ErrorCode::InvalidArgument, "rs_exists needs r >= 2 and a >= 0");
  if (a > r) return false;
  if (r == 2) return a == 0 || a == 2;
  if (r % 2 != 0) return false;
  if (a % 2 == 0 && r % 4 != 2) return false;
  if (a % 2 == 1) {
    const int sign = (r / 2 - 1) % 2 == 0 ? 1 : -1;
    if (((sign % 4) + 4) % 4 != 3) return false;
  }
  if (r % 8 != 2 && !(r > a && a > 0)) return false;
  return true;
}

const std::vector<Table2Entry>& table2() {
  static const std::vector<Table2Entry> rows = {
      {0, 1, "U+U(3)+E8+E8", "U(3)"},
      {0, 2, "U+U+E8+E8", "U"},
      {1, 1, "U+U(3)+E6+E8", "U(3)+A2"},
      {1, 2, "U+U+E6+E8", "U+A2"},
      {2, 1, "U+U(3)+E6+E6", "U(3)+A2^2"},
      {2, 2, "U+U+E6+E6", "U+A2^2"},
      {3, 0, "U+U(3)+A2^5", "U(3)+E6*(3)"},
      {3, 1, "U+U+A2^5", "U(3)+A2^3"},
      {3, 2, "U+U(3)+A2+E8", "U+A2^3"},
      {3, 3, "U+U+A2+E8", "U+E6"},
      {4, 1, "U+U(3)+A2^4", "U(3)+A2^4"},
      {4, 2, "U+U+A2^4", "U+A2^4"},
      {4, 3, "U+U(3)+E8", "U+E6+A2"},
      {4, 4, "U+U+E8", "U+E8"},
      {5, 2, "U+U(3)+A2^3", "U+A2^5"},
      {5, 3, "U+U(3)+E6", "U+A2^2+E6"},
      {5, 4, "U+U+E6", "U+E8+A2"},
      {6, 3, "U+U(3)+A2^2", "U+E6+A2^3"},
      {6, 4, "U+U+A2^2", "U+E6^2"},
      {7, 4, "U+U(3)+A2", "U+E6+E6+A2"},
      {7, 5, "U+U+A2", "U+E6+E8"},
      {8, 5, "U+U(3)", "U+E6+E8+A2"},
      {8, 6, "U+U", "U+E8+E8"},
      {9, 6, "A2(-1)", "U+E8+E8+A2"},
  };
  return rows;
}

std::string table2_tsv() {
  std::ostringstream out;
  out << "n\tk\tT\tN\n";
  for (const auto& e : table2()) out << e.n << '\t' << e.k << '\t' << e.t << '\t' << e.n_lattice << '\n';
  return out.str();
}

namespace {

const Table2Entry& table2_entry(int n, int k) {
  for (const auto& e : table2())
    if (e.n == n && e.k == k) return e;
  fail(ErrorCode::NotInTable, "(" + std::to_string(n) + ", " + std::to_string(k) +
                                  ") is not a row of the lattice table");
}

// "U+U+A2^2" -> {"U", "U", "A2", "A2"}
std::vector<std::string> expand_terms(const std::string& expression) {
  std::vector<std::string> out;
  std::stringstream in(expression);
  std::string term;
  while (std::getline(in, term, '+')) {
    int count = 1;
    if (auto caret = term.find('^'); caret != std::string::npos) {
      count = std::stoi(term.substr(caret + 1));
      term = term.substr(0, caret);
    }
    for (int i = 0; i < count; ++i) out.push_back(term);
  }
  return out;
}

Isometry blockwise_isometry(const std::string& expression) {
  const auto terms = expand_terms(expression);
  std::optional<Isometry> rho;
  for (std::size_t i = 0; i < terms.size();) {
    std::string block = terms[i];
    if (block == "U" && i + 1 < terms.size() && (terms[i + 1] == "U" || terms[i + 1] == "U(3)")) {
      block += "+" + terms[i + 1];
      i += 2;
    } else {
      ++i;
    }
    Isometry piece = standard_isometry(block);
    rho = rho ? direct_sum(*rho, piece) : piece;
  }
  if (!rho) fail(ErrorCode::InvalidArgument, "empty lattice expression");
  return *rho;
}

std::string sig_text(const Signature& s) {
  return "(" + std::to_string(s.n_plus) + "," + std::to_string(s.n_minus) + "," +
         std::to_string(s.n_zero) + ")";
}

std::string factors_text(const IntVector& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + to_string(f[i]);
  return s + "]";
}

template <class F>
Clause run_clause(std::string name, F&& body) {
  Clause c;
  c.name = std::move(name);
  try {
    c.detail = body(c.passed);
  } catch (const Error& e) {
    c.passed = false;
    c.detail = e.what();
  }
  return c;
}

}  // namespace

LatticePair build_pair(int n, int k) {
  const Table2Entry& e = table2_entry(n, k);
  Lattice t = lattice_from_expression(e.t);
  Isometry rho = blockwise_isometry(e.t);
  if (rho.lattice().gram() != t.gram())
    fail(ErrorCode::CheckFailed, "blockwise isometry lives on a different Gram matrix");
  Lattice nl = lattice_from_expression(e.n_lattice);
  return {n, k, t.renamed(e.t), nl.renamed(e.n_lattice), Isometry(t.renamed(e.t), rho.matrix())};
}

bool RowReport::passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.passed; });
}

RowReport verify_row(int n, int k) {
  if (!in_table1(n, k))
    fail(ErrorCode::NotInTable, "(" + std::to_string(n) + ", " + std::to_string(k) +
                                    ") is not a row of the fixed-locus table");
  const FixedLocusType inv = invariants_from_nk(n, k);
  const LatticePair pair = build_pair(n, k);
  const std::size_t m = static_cast<std::size_t>(inv.m);
  const Integer a = inv.a;
  RowReport report{n, k, {}};

  report.clauses.push_back(run_clause("signature", [&](bool& ok) {
    Signature s = signature(pair.t);
    ok = s == Signature{2, 2 * m - 2, 0} && pair.t.rank() == 2 * m;
    return "sign(T) = " + sig_text(s) + ", rank " + std::to_string(pair.t.rank()) +
           ", expected (2," + std::to_string(2 * m - 2) + ",0)";
  }));

  report.clauses.push_back(run_clause("t-elementary", [&](bool& ok) {
    const std::size_t at = a_invariant(pair.t, 3);
    ok = is_p_elementary(pair.t, 3) && at == static_cast<std::size_t>(inv.a);
    return "a(T) = " + std::to_string(at) + ", expected " + to_string(a);
  }));

  report.clauses.push_back(run_clause("e-star", [&](bool& ok) {
    IsometryCheck c = verify_isometry(pair.t, pair.rho_t.matrix());
    const bool fpf = is_fixed_point_free(pair.rho_t);
    const bool triv = acts_trivially_on_discriminant(pair.rho_t);
    ok = c.valid && c.order == 3u && fpf && triv;
    return std::string("valid ") + (c.valid ? "yes" : "no") + ", order " +
           (c.order ? std::to_string(*c.order) : std::string(">12")) + ", fixed-point-free " +
           (fpf ? "yes" : "no") + ", trivial on A_T " + (triv ? "yes" : "no");
  }));

  report.clauses.push_back(run_clause("n-lattice", [&](bool& ok) {
    const std::size_t r = pair.n_lattice.rank();
    Signature s = signature(pair.n_lattice);
    const std::size_t an = a_invariant(pair.n_lattice, 3);
    const bool rs = rs_exists(static_cast<int>(r), static_cast<int>(an));
    ok = r == 22 - 2 * m && s == Signature{1, r - 1, 0} && is_p_elementary(pair.n_lattice, 3) &&
         an == static_cast<std::size_t>(inv.a) && rs;
    return "rank " + std::to_string(r) + ", sign(N) = " + sig_text(s) + ", a(N) = " +
           std::to_string(an) + ", rs_exists " + (rs ? "yes" : "no");
  }));

  report.clauses.push_back(run_clause("glue", [&](bool& ok) {
    FiniteQuadraticForm qt = discriminant_form(pair.t);
    FiniteQuadraticForm qn = discriminant_form(pair.n_lattice);
    const int st = gauss_signature(qt);
    const int sn = gauss_signature(qn);
    const bool same_group = qt.group().invariant_factors == qn.group().invariant_factors;
    ok = same_group && qt.size() == qn.size() && (st + sn) % 8 == 0;
    return "|A_T| = " + std::to_string(qt.size()) + ", |A_N| = " + std::to_string(qn.size()) +
           ", factors " + factors_text(qt.group().invariant_factors) + " / " +
           factors_text(qn.group().invariant_factors) + ", gauss signatures " +
           std::to_string(st) + " / " + std::to_string(sn);
  }));

  report.clauses.push_back(run_clause("e-rank", [&](bool& ok) {
    EModule mod = as_e_module(pair.rho_t);
    ok = mod.e_rank() == m;
    return "E-rank " + std::to_string(mod.e_rank()) + ", m = " + std::to_string(m);
  }));

  report.clauses.push_back(run_clause("smith", [&](bool& ok) {
    // n points, a genus-g curve and k - 1 rational curves
    const int fixed_dim = k == 0 ? n : n + (2 + 2 * *inv.g) + 2 * (k - 1);
    const int lhs = 24 - fixed_dim;
    const int rhs = 2 * inv.a + inv.m;
    ok = lhs == rhs;
    return "24 - " + std::to_string(fixed_dim) + " = " + std::to_string(lhs) + ", 2a + m = " +
           std::to_string(rhs);
  }));

  return report;
}

bool lefschetz_check(int n, int k, std::optional<int> g) {
  const FixedLocusType inv = invariants_from_nk(n, k);
  if (k > 0 && !g) fail(ErrorCode::InvalidArgument, "k > 0 needs a genus");
  const int chi_curves = k == 0 ? 0 : (2 - 2 * *g) + 2 * (k - 1);
  return chi_curves + n == 3 * (8 - inv.m) && 2 * n - chi_curves == 6;
}

RowReport k12_factor_check() {
  const Lattice t = build_pair(3, 0).t;
  const Lattice f = direct_sum(standard_lattice("A2(-1)"), coxeter_todd_lattice());
  RowReport report{3, 0, {}};
  report.clauses.push_back(run_clause("rank", [&](bool& ok) {
    ok = t.rank() == f.rank();
    return std::to_string(t.rank()) + " / " + std::to_string(f.rank());
  }));
  report.clauses.push_back(run_clause("signature", [&](bool& ok) {
    const Signature st = signature(t);
    const Signature sf = signature(f);
    ok = st == sf;
    return sig_text(st) + " / " + sig_text(sf);
  }));
  report.clauses.push_back(run_clause("a-invariant", [&](bool& ok) {
    const std::size_t at = a_invariant(t, 3);
    const std::size_t af = a_invariant(f, 3);
    ok = at == af && is_p_elementary(t, 3) && is_p_elementary(f, 3);
    return std::to_string(at) + " / " + std::to_string(af);
  }));
  report.clauses.push_back(run_clause("gauss-signature", [&](bool& ok) {
    const int st = gauss_signature(discriminant_form(t));
    const int sf = gauss_signature(discriminant_form(f));
    ok = st == sf;
    return std::to_string(st) + " / " + std::to_string(sf);
  }));
  return report;
}

}  // namespace eisenlat
