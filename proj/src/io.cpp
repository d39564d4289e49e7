#include "eisenlat/io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "eisenlat/discriminant.hpp"

namespace eisenlat {

namespace {

[[noreturn]] void parse_fail(std::size_t line, std::size_t col, const std::string& msg) {
  fail(ErrorCode::ParseError,
       "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

struct Token {
  Integer value;
  std::size_t col;
};

std::vector<Token> tokenize(std::string_view line, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (c == '+' || c == '-') ++i;
    const std::size_t digits = i;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
    if (i == digits || (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
                        line[i] != '#'))
      parse_fail(lineno, start + 1, "expected an integer");
    std::string text(line.substr(start, i - start));
    if (text[0] == '+') text.erase(0, 1);
    out.push_back({Integer(text.c_str()), start + 1});
  }
  return out;
}

std::size_t to_dim(const Token& t, std::size_t lineno) {
  if (t.value < 0 || t.value > 10000) parse_fail(lineno, t.col, "dimension out of range");
  return static_cast<std::size_t>(t.value);
}

Json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return to_string(x);
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      Rational r = parse_rational(s);
      if (is_integral(r)) return numerator(r);
    } catch (const Error&) {
    }
    fail(ErrorCode::ParseError, "'" + s + "' is not an integer");
  }
  fail(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

Json int_vector_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

}  // namespace

IntMatrix parse_matrix_text(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<Token>>> lines;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    auto tokens = tokenize(text.substr(start, end - start), lineno);
    if (!tokens.empty()) lines.emplace_back(lineno, std::move(tokens));
    start = end + 1;
  }
  if (lines.empty()) parse_fail(lineno, 1, "missing dimension header");
  const auto& [hline, header] = lines.front();
  if (header.size() > 2) parse_fail(hline, header[2].col, "header has more than two fields");
  const std::size_t rows = to_dim(header[0], hline);
  const std::size_t cols = header.size() == 2 ? to_dim(header[1], hline) : rows;
  if (lines.size() - 1 < rows)
    parse_fail(lineno, 1, "expected " + std::to_string(rows) + " rows, found " +
                              std::to_string(lines.size() - 1));
  if (lines.size() - 1 > rows)
    parse_fail(lines[rows + 1].first, lines[rows + 1].second.front().col,
               "unexpected data after " + std::to_string(rows) + " rows");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& [ln, toks] = lines[i + 1];
    if (toks.size() != cols)
      parse_fail(ln, toks.size() > cols ? toks[cols].col : 1,
                 "expected " + std::to_string(cols) + " entries, found " +
                     std::to_string(toks.size()));
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = toks[j].value;
  }
  return m;
}

IntMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_matrix_text(buf.str());
}

std::string format_matrix_text(const IntMatrix& m) {
  std::ostringstream out;
  if (m.rows() == m.cols())
    out << m.rows() << '\n';
  else
    out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << to_string(m(i, j));
    out << '\n';
  }
  return out.str();
}

Lattice parse_gram_text(std::string_view text, std::string name) {
  IntMatrix m = parse_matrix_text(text);
  if (m.rows() != m.cols()) fail(ErrorCode::ParseError, "Gram matrix must be square");
  return make_lattice(std::move(m), std::move(name));
}

Lattice read_gram_file(const std::string& path) {
  IntMatrix m = read_matrix_file(path);
  if (m.rows() != m.cols()) fail(ErrorCode::ParseError, "Gram matrix in '" + path + "' must be square");
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) name.erase(0, slash + 1);
  if (auto dot = name.find_last_of('.'); dot != std::string::npos && dot > 0) name.erase(dot);
  return make_lattice(std::move(m), name);
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(int_vector_json(m.row(i)));
  return out;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      fail(ErrorCode::ParseError, "row " + std::to_string(i) + " has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = integer_from_json(j[i][c]);
  }
  return m;
}

Json lattice_to_json(const Lattice& l) {
  Json out;
  out["name"] = l.name();
  out["rank"] = l.rank();
  out["gram"] = matrix_to_json(l.gram());
  const Integer det = l.determinant();
  out["det"] = integer_json(det);
  const Signature s = signature(l);
  out["signature"] = {s.n_plus, s.n_minus, s.n_zero};
  if (det == 0)
    out["invariant_factors"] = nullptr;
  else
    out["invariant_factors"] = int_vector_json(discriminant_group(l).invariant_factors);
  return out;
}

Lattice lattice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("gram")) fail(ErrorCode::ParseError, "lattice JSON needs a gram");
  IntMatrix g = matrix_from_json(j.at("gram"));
  if (g.rows() != g.cols()) fail(ErrorCode::ParseError, "gram must be square");
  Lattice l = make_lattice(std::move(g), j.value("name", std::string{}));
  if (j.contains("rank") && j.at("rank").get<std::size_t>() != l.rank())
    fail(ErrorCode::ParseError, "rank does not match the gram");
  if (j.contains("det") && integer_from_json(j.at("det")) != l.determinant())
    fail(ErrorCode::ParseError, "det does not match the gram");
  return l;
}

Json to_json(const EisNum& z) {
  Json out;
  out["a"] = to_string(z.a);
  out["b"] = to_string(z.b);
  return out;
}

EisNum eis_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b"))
    fail(ErrorCode::ParseError, "EisNum JSON needs fields a and b");
  return {parse_rational(j.at("a").get<std::string>()), parse_rational(j.at("b").get<std::string>())};
}

Json to_json(const EisMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& z : row) r.push_back(to_json(z));
    out.push_back(std::move(r));
  }
  return out;
}

Json to_json(const SmithDecomposition& s) {
  Json out;
  out["D"] = matrix_to_json(s.diagonal);
  out["U"] = matrix_to_json(s.left);
  out["V"] = matrix_to_json(s.right);
  out["invariant_factors"] = int_vector_json(s.invariant_factors());
  return out;
}

Json to_json(const FixedLocusType& t) {
  Json out;
  out["n"] = t.n;
  out["k"] = t.k;
  if (t.g)
    out["g"] = *t.g;
  else
    out["g"] = nullptr;
  out["m"] = t.m;
  out["a"] = t.a;
  return out;
}

Json to_json(const RowReport& r) {
  Json out;
  out["n"] = r.n;
  out["k"] = r.k;
  out["passed"] = r.passed();
  Json clauses = Json::array();
  for (const auto& c : r.clauses)
    clauses.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  out["clauses"] = std::move(clauses);
  return out;
}

Json to_json(const ConfigAnalysis& a) {
  Json out;
  Json fibers = Json::array();
  for (const auto& f : a.fibers) fibers.push_back(f.name());
  out["fibers"] = std::move(fibers);
  out["n"] = a.n;
  out["k"] = a.k;
  out["genus"] = a.genus;
  out["valid"] = a.valid;
  out["euler_sum"] = a.euler_sum;
  out["fixed_curves"] = a.fixed_curves;
  return out;
}

}  // namespace eisenlat
