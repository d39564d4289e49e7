// eisenlat: command-line front end.
//
// Exit codes: 0 success, 1 failed mathematical check, 2 input error.

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "eisenlat/classification.hpp"
#include "eisenlat/discriminant.hpp"
#include "eisenlat/eisenstein.hpp"
#include "eisenlat/fibration.hpp"
#include "eisenlat/io.hpp"
#include "eisenlat/smith.hpp"
#include "eisenlat/standard.hpp"
#include "eisenlat/sublattice.hpp"

using namespace eisenlat;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::CheckFailed:
    case ErrorCode::DegenerateSection:
    case ErrorCode::NegativeGenus:
    case ErrorCode::NotFound:
    case ErrorCode::BudgetExceeded:
    case ErrorCode::NonIntegralHermitian:
    case ErrorCode::Overflow: return kCheckFailed;
    default: return kInputError;
  }
}

struct Globals {
  bool json = false;
  bool tsv = false;
  std::uint64_t seed = 20240101;
  std::optional<std::size_t> budget;
};

std::size_t search_budget(const Globals& g, std::size_t fallback) {
  if (g.budget) return *g.budget;
  if (const char* env = std::getenv("EISENLAT_BUDGET")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidArgument, "EISENLAT_BUDGET must be a non-negative integer");
    }
  }
  return fallback;
}

std::string join(const IntVector& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + to_string(v[i]);
  return s;
}

std::string sig_str(const Signature& s) {
  return "(" + std::to_string(s.n_plus) + "," + std::to_string(s.n_minus) + "," +
         std::to_string(s.n_zero) + ")";
}

// Either a Gram file plus an isometry file, or a standard name.
struct IsometryInput {
  std::string gram;
  std::string matrix;
  std::string standard;

  void add(CLI::App* cmd) {
    cmd->add_option("gram", gram, "Gram matrix file");
    cmd->add_option("matrix", matrix, "isometry matrix file (columns are images)");
    cmd->add_option("--standard", standard, "A2, A2(-1), U+U(3), U+U, E6, E8 or K12");
  }

  Isometry load() const {
    if (!standard.empty()) {
      if (!gram.empty()) fail(ErrorCode::InvalidArgument, "give files or --standard, not both");
      return standard_isometry(standard);
    }
    if (gram.empty() || matrix.empty())
      fail(ErrorCode::InvalidArgument, "need a Gram file and an isometry file, or --standard");
    return Isometry(read_gram_file(gram), read_matrix_file(matrix));
  }
};

void print_text_matrix(std::ostream& out, const std::string& label, const IntMatrix& m) {
  out << label << ":\n";
  for (std::size_t i = 0; i < m.rows(); ++i) out << "  " << join(m.row(i)) << '\n';
}

int lattice_info(const Globals& g, const std::string& path) {
  Lattice l = read_gram_file(path);
  if (g.json) {
    Json j = lattice_to_json(l);
    if (!l.is_degenerate()) j["a3"] = a_invariant(l, 3);
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  const Signature s = signature(l);
  const char* sep = g.tsv ? "\t" : ": ";
  std::cout << "name" << sep << l.name() << '\n'
            << "rank" << sep << l.rank() << '\n'
            << "det" << sep << to_string(l.determinant()) << '\n'
            << "signature" << sep << sig_str(s) << '\n';
  if (l.is_degenerate()) {
    std::cout << "discriminant" << sep << "degenerate\n";
  } else {
    DiscriminantGroup d = discriminant_group(l);
    std::string group = d.length() == 0 ? "trivial" : "";
    for (std::size_t i = 0; i < d.length(); ++i)
      group += (i ? " x " : "") + std::string("Z/") + to_string(d.invariant_factors[i]);
    std::cout << "discriminant" << sep << group << '\n'
              << "a3" << sep << a_invariant(l, 3) << '\n';
  }
  return kOk;
}

int lattice_snf(const Globals& g, const std::string& path) {
  SmithDecomposition s = smith_normal_form(read_matrix_file(path));
  if (g.json) {
    std::cout << to_json(s).dump(2) << '\n';
  } else {
    std::cout << "invariant factors: " << join(s.invariant_factors()) << '\n';
    print_text_matrix(std::cout, "D", s.diagonal);
    print_text_matrix(std::cout, "U", s.left);
    print_text_matrix(std::cout, "V", s.right);
  }
  return kOk;
}

int lattice_disc(const Globals& g, const std::string& path, std::size_t max_elements) {
  Lattice l = read_gram_file(path);
  FiniteQuadraticForm q = discriminant_form(l, {max_elements});
  const int gs = gauss_signature(q);
  const Signature s = signature(l);
  const int expected = ((static_cast<int>(s.n_plus) - static_cast<int>(s.n_minus)) % 8 + 8) % 8;
  const auto& grp = q.group();
  if (g.json) {
    Json j;
    j["invariant_factors"] = Json::array();
    for (const auto& d : grp.invariant_factors) j["invariant_factors"].push_back(to_string(d));
    j["order"] = q.size();
    Json gens = Json::array();
    for (std::size_t i = 0; i < grp.length(); ++i) {
      IntVector e(grp.length(), Integer(0));
      e[i] = 1;
      Json coords = Json::array();
      for (const auto& c : grp.generators[i]) coords.push_back(to_string(c));
      gens.push_back({{"coordinates", coords}, {"q", to_string(q.q(e))}});
    }
    j["generators"] = gens;
    j["gauss_signature"] = gs;
    j["signature_mod_8"] = expected;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "order: " << q.size() << '\n'
              << "invariant factors: " << join(grp.invariant_factors) << '\n';
    for (std::size_t i = 0; i < grp.length(); ++i) {
      IntVector e(grp.length(), Integer(0));
      e[i] = 1;
      std::string coords;
      for (const auto& c : grp.generators[i]) coords += (coords.empty() ? "" : " ") + to_string(c);
      std::cout << "g" << i << " = (" << coords << "), q = " << to_string(q.q(e)) << '\n';
    }
    std::cout << "gauss signature: " << gs << " (signature mod 8: " << expected << ")\n";
  }
  return gs == expected ? kOk : kCheckFailed;
}

int lattice_complement(const Globals& g, const std::string& path, const std::string& vectors) {
  Lattice l = read_gram_file(path);
  // one vector per row
  IntMatrix s = read_matrix_file(vectors).transpose();
  if (s.rows() != l.rank())
    fail(ErrorCode::RankMismatch, "vectors have " + std::to_string(s.rows()) +
                                      " coordinates, lattice rank " + std::to_string(l.rank()));
  Sublattice c = orthogonal_complement(l, s);
  if (g.json) {
    Json j;
    j["basis"] = matrix_to_json(c.basis.transpose());
    j["lattice"] = lattice_to_json(c.lattice);
    std::cout << j.dump(2) << '\n';
  } else {
    print_text_matrix(std::cout, "basis (rows)", c.basis.transpose());
    print_text_matrix(std::cout, "gram", c.lattice.gram());
    std::cout << "signature: " << sig_str(signature(c.lattice)) << '\n';
  }
  return kOk;
}

int isometry_verify(const Globals& g, const IsometryInput& in) {
  Lattice l;
  IntMatrix m;
  if (!in.standard.empty()) {
    Isometry r = in.load();
    l = r.lattice();
    m = r.matrix();
  } else {
    if (in.gram.empty() || in.matrix.empty())
      fail(ErrorCode::InvalidArgument, "need a Gram file and an isometry file, or --standard");
    l = read_gram_file(in.gram);
    m = read_matrix_file(in.matrix);
  }
  IsometryCheck c = verify_isometry(l, m);
  std::optional<bool> fpf, triv;
  if (c.valid) {
    Isometry r(l, m);
    fpf = is_fixed_point_free(r);
    if (!l.is_degenerate()) triv = acts_trivially_on_discriminant(r);
  }
  if (g.json) {
    Json j;
    j["valid"] = c.valid;
    j["order"] = c.order ? Json(*c.order) : Json(nullptr);
    j["fixed_point_free"] = fpf ? Json(*fpf) : Json(nullptr);
    j["trivial_on_discriminant"] = triv ? Json(*triv) : Json(nullptr);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "valid: " << (c.valid ? "yes" : "no") << '\n'
              << "order: " << (c.order ? std::to_string(*c.order) : std::string(">12")) << '\n';
    if (fpf) std::cout << "fixed-point-free: " << (*fpf ? "yes" : "no") << '\n';
    if (triv) std::cout << "trivial on discriminant: " << (*triv ? "yes" : "no") << '\n';
  }
  return c.valid ? kOk : kCheckFailed;
}

int isometry_fixed(const Globals& g, const IsometryInput& in) {
  Isometry r = in.load();
  Sublattice f = fixed_sublattice(r);
  std::optional<Sublattice> co;
  const IntMatrix& m = r.matrix();
  if (m * m * m == IntMatrix::identity(m.rows())) co = coinvariant_sublattice(r);
  if (g.json) {
    Json j;
    j["fixed"] = {{"basis", matrix_to_json(f.basis.transpose())}, {"lattice", lattice_to_json(f.lattice)}};
    if (co)
      j["coinvariant"] = {{"basis", matrix_to_json(co->basis.transpose())},
                          {"lattice", lattice_to_json(co->lattice)}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "fixed rank: " << f.basis.cols() << '\n';
    print_text_matrix(std::cout, "fixed basis (rows)", f.basis.transpose());
    if (co) {
      std::cout << "coinvariant rank: " << co->basis.cols() << '\n';
      print_text_matrix(std::cout, "coinvariant basis (rows)", co->basis.transpose());
    }
  }
  return kOk;
}

int isometry_find(const Globals& g, const std::string& path, bool allow_fixed, bool any_disc) {
  Lattice l = read_gram_file(path);
  IsometrySearchOptions o;
  o.require_fixed_point_free = !allow_fixed;
  o.require_trivial_on_discriminant = !any_disc;
  o.max_nodes = search_budget(g, o.max_nodes);
  Isometry r = find_order3_isometry(l, o);
  if (g.json)
    std::cout << Json{{"matrix", matrix_to_json(r.matrix())}}.dump(2) << '\n';
  else
    std::cout << format_matrix_text(r.matrix());
  return kOk;
}

// H(x, y) on random vectors: 2 Re H = ( , ), H(rho x, y) = zeta H, H(y, x) = conj H.
bool random_contract_checks(const EModule& mod, std::uint64_t seed, std::size_t trials) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  const std::size_t n = mod.lattice.rank();
  auto draw = [&] {
    IntVector v(n);
    for (auto& x : v) x = coef(rng);
    return v;
  };
  for (std::size_t t = 0; t < trials; ++t) {
    IntVector x = draw(), y = draw();
    EisNum h = hermitian_form(mod, x, y);
    if (2 * h.real_part() != Rational(mod.lattice.inner(x, y))) return false;
    if (hermitian_form(mod, mod.rho.apply(x), y) != EisNum::zeta() * h) return false;
    if (hermitian_form(mod, y, x) != h.conj()) return false;
  }
  return true;
}

int eisenstein_hermitian(const Globals& g, const IsometryInput& in) {
  EModule mod = as_e_module(in.load());
  EisMatrix h = hermitian_gram(mod);
  const EisNum det = determinant(h);
  const bool contract = random_contract_checks(mod, g.seed, 64);
  if (g.json) {
    Json j;
    IntMatrix eb = IntMatrix::from_columns(mod.e_basis, mod.lattice.rank());
    j["e_rank"] = mod.e_rank();
    j["e_basis"] = matrix_to_json(eb.transpose());
    j["hermitian_gram"] = to_json(h);
    j["det"] = to_json(det);
    j["seed"] = g.seed;
    j["contract_checks"] = contract;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "E-rank: " << mod.e_rank() << '\n' << "hermitian gram:\n";
    for (const auto& row : h) {
      std::cout << " ";
      for (const auto& z : row) std::cout << ' ' << to_string(z);
      std::cout << '\n';
    }
    std::cout << "det: " << to_string(det) << '\n'
              << "contract checks (seed " << g.seed << "): " << (contract ? "pass" : "FAIL") << '\n';
  }
  return contract ? kOk : kCheckFailed;
}

int eisenstein_unimodular(const Globals& g, const IsometryInput& in) {
  EModule mod = as_e_module(in.load());
  const bool u = is_unimodular_over_E(mod);
  const EisNum det = determinant(hermitian_gram(mod));
  if (g.json)
    std::cout << Json{{"unimodular", u}, {"det", to_json(det)}, {"e_rank", mod.e_rank()}}.dump(2) << '\n';
  else
    std::cout << "unimodular over E: " << (u ? "yes" : "no") << " (det " << to_string(det) << ")\n";
  return u ? kOk : kCheckFailed;
}

void print_report_text(const RowReport& r) {
  std::cout << "row (" << r.n << "," << r.k << "): " << (r.passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& c : r.clauses)
    std::cout << "  " << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
}

int classify_table1(const Globals& g) {
  auto rows = enumerate_table1();
  if (g.json) {
    Json j = Json::array();
    for (const auto& r : rows) j.push_back(to_json(r));
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << table1_tsv(rows);
  }
  return kOk;
}

int classify_table2(const Globals& g, bool verify) {
  if (!verify) {
    if (g.json) {
      Json j = Json::array();
      for (const auto& e : table2()) j.push_back({{"n", e.n}, {"k", e.k}, {"T", e.t}, {"N", e.n_lattice}});
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << table2_tsv();
    }
    return kOk;
  }
  bool all = true;
  Json reports = Json::array();
  if (!g.json) std::cout << "n\tk\tT\tN\tverified\n";
  for (const auto& e : table2()) {
    RowReport r = verify_row(e.n, e.k);
    all = all && r.passed();
    if (g.json) {
      Json j = to_json(r);
      j["T"] = e.t;
      j["N"] = e.n_lattice;
      reports.push_back(std::move(j));
    } else {
      std::cout << e.n << '\t' << e.k << '\t' << e.t << '\t' << e.n_lattice << '\t'
                << (r.passed() ? "pass" : "FAIL") << '\n';
    }
  }
  if (g.json) std::cout << Json{{"passed", all}, {"rows", reports}}.dump(2) << '\n';
  return all ? kOk : kCheckFailed;
}

int classify_verify_row(const Globals& g, int n, int k) {
  RowReport r = verify_row(n, k);
  if (g.json) {
    Json j = to_json(r);
    j["invariants"] = to_json(invariants_from_nk(n, k));
    std::cout << j.dump(2) << '\n';
  } else {
    print_report_text(r);
  }
  return r.passed() ? kOk : kCheckFailed;
}

std::vector<int> parse_mults(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    auto e = item.find_last_not_of(" \t");
    item = item.substr(b, e - b + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) fail(ErrorCode::ParseError, "'" + item + "' is not an integer multiplicity");
    out.push_back(v);
  }
  return out;
}

int fibration_analyze(const Globals& g, const std::string& mults) {
  std::vector<int> ms = parse_mults(mults);
  for (int m : ms)
    if (m < 1) fail(ErrorCode::InvalidArgument, "multiplicities must be positive");
  // simple roots are implied by the degree count
  std::erase(ms, 1);
  for (int m : ms) kodaira_from_multiplicity(m);
  ConfigAnalysis a = analyze_config(make_fiber_config(ms));
  if (g.json) {
    std::cout << to_json(a).dump(2) << '\n';
  } else {
    std::string fibers;
    for (const auto& f : a.fibers) fibers += (fibers.empty() ? "" : " ") + f.name();
    std::cout << "fibers: " << fibers << '\n'
              << "(n,k): (" << a.n << "," << a.k << ")\n"
              << "genus: " << a.genus << '\n'
              << "euler sum: " << a.euler_sum << '\n'
              << "valid: " << (a.valid ? "yes" : "no") << '\n';
  }
  return a.valid ? kOk : kCheckFailed;
}

int fibration_enumerate(const Globals& g) {
  auto profiles = enumerate_profiles();
  auto mult_text = [](const FiberConfig& c) {
    std::string s;
    for (int m : c.multiplicities) s += (s.empty() ? "" : ",") + std::to_string(m);
    return s.empty() ? std::string("-") : s;
  };
  if (g.json) {
    Json j = Json::array();
    for (const auto& p : profiles) {
      if (!p.analysis) continue;
      Json e = to_json(*p.analysis);
      e["multiplicities"] = p.config.multiplicities;
      j.push_back(std::move(e));
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "mults\tsimple\tn\tk\tg\n";
    for (const auto& p : profiles)
      if (p.analysis)
        std::cout << mult_text(p.config) << '\t' << p.config.simple_roots() << '\t' << p.analysis->n
                  << '\t' << p.analysis->k << '\t' << p.analysis->genus << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice and order-3 isometry toolkit"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  std::size_t budget = 0;
  app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--tsv", g.tsv, "TSV output");
  app.add_option("--seed", g.seed, "seed for randomized checks");
  auto* budget_opt = app.add_option("--budget", budget, "search node cap (overrides EISENLAT_BUDGET)");

  std::function<int()> run;

  auto* lattice = app.add_subcommand("lattice", "lattice computations")->require_subcommand(1);
  std::string path, vectors;
  std::size_t max_elements = 100000;
  auto* l_info = lattice->add_subcommand("info", "rank, det, signature, discriminant group");
  l_info->add_option("gram", path)->required();
  l_info->callback([&] { run = [&] { return lattice_info(g, path); }; });
  auto* l_snf = lattice->add_subcommand("snf", "Smith normal form of a matrix");
  l_snf->add_option("matrix", path)->required();
  l_snf->callback([&] { run = [&] { return lattice_snf(g, path); }; });
  auto* l_disc = lattice->add_subcommand("disc", "discriminant form and Gauss signature");
  l_disc->add_option("gram", path)->required();
  l_disc->add_option("--max-elements", max_elements, "cap on |A_L|");
  l_disc->callback([&] { run = [&] { return lattice_disc(g, path, max_elements); }; });
  auto* l_comp = lattice->add_subcommand("complement", "orthogonal complement of vectors");
  l_comp->add_option("gram", path)->required();
  l_comp->add_option("vectors", vectors, "matrix file, one vector per row")->required();
  l_comp->callback([&] { run = [&] { return lattice_complement(g, path, vectors); }; });

  auto* iso = app.add_subcommand("isometry", "isometries")->require_subcommand(1);
  IsometryInput iso_in;
  bool allow_fixed = false, any_disc = false;
  auto* i_verify = iso->add_subcommand("verify", "check an isometry");
  iso_in.add(i_verify);
  i_verify->callback([&] { run = [&] { return isometry_verify(g, iso_in); }; });
  auto* i_fixed = iso->add_subcommand("fixed", "fixed and coinvariant sublattices");
  iso_in.add(i_fixed);
  i_fixed->callback([&] { run = [&] { return isometry_fixed(g, iso_in); }; });
  auto* i_find = iso->add_subcommand("find", "search for an order-3 isometry");
  i_find->add_option("gram", path)->required();
  i_find->add_flag("--allow-fixed", allow_fixed, "do not require fixed-point-free");
  i_find->add_flag("--any-discriminant", any_disc, "do not require trivial action on A_L");
  i_find->callback([&] { run = [&] { return isometry_find(g, path, allow_fixed, any_disc); }; });

  auto* eis = app.add_subcommand("eisenstein", "E-module structure")->require_subcommand(1);
  IsometryInput eis_in;
  auto* e_herm = eis->add_subcommand("hermitian", "E-basis and hermitian Gram");
  eis_in.add(e_herm);
  e_herm->callback([&] { run = [&] { return eisenstein_hermitian(g, eis_in); }; });
  auto* e_uni = eis->add_subcommand("unimodular", "unimodularity over E");
  eis_in.add(e_uni);
  e_uni->callback([&] { run = [&] { return eisenstein_unimodular(g, eis_in); }; });

  auto* cls = app.add_subcommand("classify", "fixed-locus and lattice tables")->require_subcommand(1);
  bool verify = false;
  int row_n = 0, row_k = 0;
  cls->add_subcommand("table1", "fixed-locus table")->callback([&] {
    run = [&] { return classify_table1(g); };
  });
  auto* c_t2 = cls->add_subcommand("table2", "lattice table");
  c_t2->add_flag("--verify", verify, "verify every row");
  c_t2->callback([&] { run = [&] { return classify_table2(g, verify); }; });
  auto* c_row = cls->add_subcommand("verify-row", "seven-clause report for one row");
  c_row->add_option("n", row_n)->required();
  c_row->add_option("k", row_k)->required();
  c_row->callback([&] { run = [&] { return classify_verify_row(g, row_n, row_k); }; });

  auto* fib = app.add_subcommand("fibration", "Kodaira fiber dictionary")->require_subcommand(1);
  std::string mults;
  auto* f_an = fib->add_subcommand("analyze", "analyze a multiplicity profile");
  f_an->add_option("--mults", mults, "comma-separated multiplicities of multiple roots");
  f_an->callback([&] { run = [&] { return fibration_analyze(g, mults); }; });
  fib->add_subcommand("enumerate", "all accepted profiles")->callback([&] {
    run = [&] { return fibration_enumerate(g); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  if (*budget_opt) g.budget = budget;
  if (g.json && g.tsv) {
    std::cerr << "error: --json and --tsv are exclusive\n";
    return kInputError;
  }

  try {
    return run();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
