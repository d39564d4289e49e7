#include "eisenlat/isometry.hpp"

#include <map>

#include "eisenlat/discriminant.hpp"
#include "eisenlat/enumerate.hpp"
#include "eisenlat/smith.hpp"
#include "eisenlat/standard.hpp"
#include "eisenlat/vendored.hpp"

namespace eisenlat {

Isometry::Isometry(Lattice lattice, IntMatrix matrix)
    : lattice_(std::move(lattice)), matrix_(std::move(matrix)) {
  if (!verify_isometry(lattice_, matrix_).valid)
    fail(ErrorCode::InvalidIsometry, "matrix does not preserve the Gram form");
}

IsometryCheck verify_isometry(const Lattice& lattice, const IntMatrix& m) {
  const std::size_t n = lattice.rank();
  if (m.rows() != n || m.cols() != n)
    fail(ErrorCode::RankMismatch, "isometry matrix is " + std::to_string(m.rows()) +
                                      "x" + std::to_string(m.cols()) +
                                      ", lattice rank " + std::to_string(n));
  IsometryCheck check;
  check.valid = m.transpose() * lattice.gram() * m == lattice.gram();
  const IntMatrix id = IntMatrix::identity(n);
  IntMatrix p = m;
  for (unsigned k = 1; k <= kMaxCheckedOrder; ++k) {
    if (p == id) {
      check.order = k;
      break;
    }
    p = p * m;
  }
  return check;
}

Sublattice fixed_sublattice(const Isometry& rho) {
  const Lattice& l = rho.lattice();
  IntMatrix k = integer_kernel(rho.matrix() - IntMatrix::identity(l.rank()));
  return {k, induced_lattice(l, k)};
}

Sublattice coinvariant_sublattice(const Isometry& rho) {
  const Lattice& l = rho.lattice();
  const IntMatrix id = IntMatrix::identity(l.rank());
  const IntMatrix& m = rho.matrix();
  const IntMatrix m2 = m * m;
  if (m2 * m != id) fail(ErrorCode::WrongOrder, "isometry does not satisfy rho^3 = I");
  IntMatrix k = integer_kernel(id + m + m2);
  return {k, induced_lattice(l, k)};
}

bool is_fixed_point_free(const Isometry& rho) {
  return fixed_sublattice(rho).basis.cols() == 0;
}

bool acts_trivially_on_discriminant(const Isometry& rho) {
  const Lattice& l = rho.lattice();
  DiscriminantGroup group = discriminant_group(l);
  RatMatrix shift = to_rational(rho.matrix() - IntMatrix::identity(l.rank()));
  for (const auto& g : group.generators) {
    for (const auto& c : shift * g)
      if (!is_integral(c)) return false;
  }
  return true;
}

Isometry direct_sum(const Isometry& a, const Isometry& b) {
  return Isometry(direct_sum(a.lattice(), b.lattice()),
                  block_diagonal(a.matrix(), b.matrix()));
}

Isometry identity_isometry(const Lattice& lattice) {
  return Isometry(lattice, IntMatrix::identity(lattice.rank()));
}

namespace {

IntMatrix from_table(std::span<const std::int64_t> data, std::size_t n) {
  if (data.size() != n * n) fail(ErrorCode::CheckFailed, "vendored table has the wrong size");
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = data[i * n + j];
  return m;
}

Isometry verified_e_star(Lattice lattice, IntMatrix m, std::string_view name) {
  IsometryCheck c = verify_isometry(lattice, m);
  if (!c.valid || c.order != 3u)
    fail(ErrorCode::CheckFailed, "standard isometry " + std::string(name) +
                                     " is not an order-3 isometry");
  Isometry rho(std::move(lattice), std::move(m));
  if (!is_fixed_point_free(rho))
    fail(ErrorCode::CheckFailed, "standard isometry " + std::string(name) +
                                     " has fixed vectors");
  if (!acts_trivially_on_discriminant(rho))
    fail(ErrorCode::CheckFailed, "standard isometry " + std::string(name) +
                                     " acts nontrivially on A_L");
  return rho;
}

// e1 -> e1 - f1, e2 -> -2e2 - f2, f1 -> -2f1 + 3e1, f2 -> f2 + 3e2 on U+U(3)
// with basis (e1, e2, f1, f2), (e1,e2) = 1, (f1,f2) = 3.
const IntMatrix kUU3 = {{1, 0, 3, 0}, {0, -2, 0, 3}, {-1, 0, -2, 0}, {0, -1, 0, 1}};
// Same map on U+U through f2 = 3 f2': f2' -> f2' + e2, e2 -> -2e2 - 3f2'.
const IntMatrix kUU = {{1, 0, 3, 0}, {0, -2, 0, 1}, {-1, 0, -2, 0}, {0, -3, 0, 1}};
// e -> f, f -> -e - f
const IntMatrix kA2 = {{0, -1}, {1, -1}};

}  // namespace

Isometry standard_isometry(std::string_view name) {
  if (name == "A2") return verified_e_star(standard_lattice("A2"), kA2, name);
  if (name == "A2(-1)") return verified_e_star(standard_lattice("A2(-1)"), kA2, name);
  if (name == "U+U(3)") return verified_e_star(lattice_from_expression("U+U(3)"), kUU3, name);
  if (name == "U+U") return verified_e_star(lattice_from_expression("U+U"), kUU, name);
  if (name == "E6")
    return verified_e_star(standard_lattice("E6"), from_table(vendored::e6_isometry(), 6), name);
  if (name == "E8")
    return verified_e_star(standard_lattice("E8"), from_table(vendored::e8_isometry(), 8), name);
  if (name == "K12")
    return verified_e_star(coxeter_todd_lattice(), from_table(vendored::k12_isometry(), 12), name);
  fail(ErrorCode::UnknownName, "no standard isometry named '" + std::string(name) + "'");
}

namespace {

using Vec64 = std::vector<std::int64_t>;

std::int64_t checked_dot(const Vec64& a, const Vec64& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t p;
    if (__builtin_mul_overflow(a[i], b[i], &p) || __builtin_add_overflow(s, p, &s))
      fail(ErrorCode::Overflow, "inner product overflows 64 bits");
  }
  return s;
}

struct Candidate {
  Vec64 v;
  Vec64 gv;  // G v
};

class IsometrySearch {
 public:
  IsometrySearch(const Lattice& lattice, const IsometrySearchOptions& options)
      : lattice_(lattice), opts_(options), n_(lattice.rank()) {
    g_.assign(n_, Vec64(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) g_[i][j] = to_int64(lattice.gram()(i, j));

    std::map<std::int64_t, std::size_t> by_norm;
    EnumerationOptions eo;
    eo.max_vectors = opts_.max_candidates;
    for (std::size_t i = 0; i < n_; ++i) {
      const std::int64_t norm = g_[i][i];
      auto it = by_norm.find(norm);
      if (it == by_norm.end()) {
        std::vector<Candidate> list;
        for (const auto& x : enumerate_vectors_of_norm(lattice, norm, eo)) {
          Candidate c;
          for (const auto& xi : x) c.v.push_back(to_int64(xi));
          c.gv.resize(n_);
          for (std::size_t r = 0; r < n_; ++r) c.gv[r] = checked_dot(g_[r], c.v);
          list.push_back(std::move(c));
        }
        it = by_norm.emplace(norm, pools_.size()).first;
        pools_.push_back(std::move(list));
      }
      pool_of_.push_back(it->second);
    }
    chosen_.assign(n_, nullptr);
  }

  std::optional<IntMatrix> run() {
    if (descend(0)) return to_matrix();
    return std::nullopt;
  }

 private:
  bool consistent(std::size_t i, const Candidate& c) const {
    const bool fpf = opts_.require_fixed_point_free;
    // (x, rho x) = -(x, x)/2 for fixed-point-free rho of order 3
    if (fpf && 2 * c.gv[i] != -g_[i][i]) return false;
    for (std::size_t j = 0; j < i; ++j) {
      const Candidate& cj = *chosen_[j];
      if (checked_dot(c.gv, cj.v) != g_[i][j]) return false;
      if (fpf && cj.gv[i] + c.gv[j] != -g_[i][j]) return false;
    }
    return true;
  }

  bool descend(std::size_t i) {
    if (i == n_) return accept();
    for (const Candidate& c : pools_[pool_of_[i]]) {
      if (++nodes_ > opts_.max_nodes)
        fail(ErrorCode::BudgetExceeded, "isometry search exceeded " +
                                            std::to_string(opts_.max_nodes) + " nodes");
      if (!consistent(i, c)) continue;
      chosen_[i] = &c;
      if (descend(i + 1)) return true;
    }
    chosen_[i] = nullptr;
    return false;
  }

  IntMatrix to_matrix() const {
    IntMatrix m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t i = 0; i < n_; ++i) m(i, j) = chosen_[j]->v[i];
    return m;
  }

  bool accept() const {
    IntMatrix m = to_matrix();
    IsometryCheck c = verify_isometry(lattice_, m);
    if (!c.valid || c.order != 3u) return false;
    Isometry rho(lattice_, m);
    if (opts_.require_fixed_point_free && !is_fixed_point_free(rho)) return false;
    if (opts_.require_trivial_on_discriminant && !acts_trivially_on_discriminant(rho))
      return false;
    return true;
  }

  const Lattice& lattice_;
  IsometrySearchOptions opts_;
  std::size_t n_;
  std::vector<Vec64> g_;
  std::vector<std::vector<Candidate>> pools_;
  std::vector<std::size_t> pool_of_;
  std::vector<const Candidate*> chosen_;
  std::size_t nodes_ = 0;
};

}  // namespace

Isometry find_order3_isometry(const Lattice& lattice, IsometrySearchOptions options) {
  if (lattice.rank() > options.max_rank)
    fail(ErrorCode::BudgetExceeded, "rank " + std::to_string(lattice.rank()) +
                                        " exceeds the search cap " +
                                        std::to_string(options.max_rank));
  Signature sig = signature(lattice);
  if (!sig.is_definite())
    fail(ErrorCode::IndefiniteLattice, "isometry search needs a definite lattice");
  if (lattice.rank() == 0) fail(ErrorCode::NotFound, "rank-0 lattice has no order-3 isometry");

  IsometrySearch search(lattice, options);
  auto m = search.run();
  if (!m) fail(ErrorCode::NotFound, "no order-3 isometry with the requested properties");
  return Isometry(lattice, *m);
}

}  // namespace eisenlat
