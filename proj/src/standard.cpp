#include "eisenlat/standard.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "eisenlat/discriminant.hpp"
#include "eisenlat/vendored.hpp"

namespace eisenlat {

namespace {

using Edge = std::pair<std::size_t, std::size_t>;

Lattice from_dynkin(std::size_t n, const std::vector<Edge>& edges,
                    std::string name) {
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = -2;
  for (auto [i, j] : edges) g(i, j) = g(j, i) = 1;
  return make_lattice(std::move(g), std::move(name));
}

Lattice a_lattice(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return from_dynkin(n, edges, "A" + std::to_string(n));
}

Lattice d_lattice(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 3, n - 1);
  return from_dynkin(n, edges, "D" + std::to_string(n));
}

Lattice e_lattice(std::size_t n) {
  // Bourbaki: 1-3-4-5-...-n with 2 attached to 4 (0-based here).
  std::vector<Edge> edges{{0, 2}, {1, 3}};
  for (std::size_t i = 2; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return from_dynkin(n, edges, "E" + std::to_string(n));
}

Lattice hyperbolic_plane() {
  return make_lattice(IntMatrix{{0, 1}, {1, 0}}, "U");
}

std::optional<std::size_t> parse_index(std::string_view digits) {
  if (digits.empty() || digits.size() > 3) return std::nullopt;
  std::size_t v = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

Lattice base_lattice(std::string_view name) {
  if (name == "U") return hyperbolic_plane();
  if (name == "K12") return coxeter_todd_lattice();
  if (name == "L_K3" || name == "LK3") {
    Lattice u = hyperbolic_plane();
    Lattice e8 = e_lattice(8);
    return direct_sum(direct_sum(direct_sum(u, u), direct_sum(u, e8)), e8)
        .renamed("L_K3");
  }
  if (name.size() >= 2) {
    auto idx = parse_index(name.substr(1));
    if (idx) {
      switch (name[0]) {
        case 'A':
          if (*idx >= 1) return a_lattice(*idx);
          break;
        case 'D':
          if (*idx >= 4) return d_lattice(*idx);
          break;
        case 'E':
          if (*idx >= 6 && *idx <= 8) return e_lattice(*idx);
          break;
        default:
          break;
      }
    }
  }
  fail(ErrorCode::UnknownName, "unknown lattice '" + std::string(name) + "'");
}

Integer parse_integer(std::string_view text, std::string_view context) {
  std::string s(text);
  bool ok = !s.empty();
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) continue;
    if (i == 0 && (c == '-' || c == '+') && s.size() > 1) continue;
    ok = false;
  }
  if (!ok) {
    fail(ErrorCode::UnknownName, "bad integer '" + s + "' in '" +
                                     std::string(context) + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s.c_str());
}

Lattice parse_term(std::string_view term) {
  std::string_view rest = term;
  std::size_t count = 1;
  if (auto caret = rest.rfind('^'); caret != std::string_view::npos) {
    auto c = parse_index(rest.substr(caret + 1));
    if (!c || *c == 0) fail(ErrorCode::UnknownName, "bad power in '" + std::string(term) + "'");
    count = *c;
    rest = rest.substr(0, caret);
  }
  std::optional<Integer> scale;
  if (!rest.empty() && rest.back() == ')') {
    auto open = rest.rfind('(');
    if (open == std::string_view::npos)
      fail(ErrorCode::UnknownName, "unbalanced ')' in '" + std::string(term) + "'");
    scale = parse_integer(rest.substr(open + 1, rest.size() - open - 2), term);
    rest = rest.substr(0, open);
  }
  bool dual = false;
  if (!rest.empty() && rest.back() == '*') {
    dual = true;
    rest.remove_suffix(1);
    if (!scale)
      fail(ErrorCode::NonIntegralScale,
           "dual lattice '" + std::string(term) + "' needs a scale, e.g. E6*(3)");
  }
  Lattice base = base_lattice(rest);
  Lattice one;
  if (dual) {
    one = dual_scaled(base, *scale);
  } else if (scale) {
    one = twist(base, *scale);
  } else {
    one = base;
  }
  Lattice out = one;
  for (std::size_t i = 1; i < count; ++i) out = direct_sum(out, one);
  return out.renamed(std::string(term));
}

std::vector<std::string> split_sum(std::string_view expression) {
  std::string s;
  // Normalise the Unicode direct-sum sign and drop whitespace.
  const std::string_view oplus = "⊕";
  for (std::size_t i = 0; i < expression.size();) {
    if (expression.substr(i, oplus.size()) == oplus) {
      s += '+';
      i += oplus.size();
    } else {
      if (!std::isspace(static_cast<unsigned char>(expression[i]))) s += expression[i];
      ++i;
    }
  }
  std::vector<std::string> terms;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '+' && depth == 0) {
      terms.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  terms.push_back(cur);
  return terms;
}

}  // namespace

Lattice standard_lattice(std::string_view name, std::optional<Integer> scale) {
  Lattice l = lattice_from_expression(name);
  if (scale) l = twist(l, *scale);
  return l;
}

Lattice lattice_from_expression(std::string_view expression) {
  auto terms = split_sum(expression);
  Lattice out;
  for (const auto& t : terms) {
    if (t.empty()) {
      fail(ErrorCode::UnknownName, "empty term in '" + std::string(expression) + "'");
    }
    out = direct_sum(out, parse_term(t));
  }
  return terms.size() == 1 ? out : out.renamed(std::string(expression));
}

Lattice coxeter_todd_lattice() {
  auto data = vendored::k12_gram();
  const std::size_t n = 12;
  if (data.size() != n * n)
    fail(ErrorCode::CheckFailed, "K12 table has the wrong size");
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = data[i * n + j];
  Lattice k12 = make_lattice(std::move(g), "K12");

  if (!signature(k12).is_negative_definite())
    fail(ErrorCode::CheckFailed, "K12 is not negative definite");
  if (k12.determinant() != 729)
    fail(ErrorCode::CheckFailed, "K12 determinant is not 3^6");
  if (!is_p_elementary(k12, 3) || a_invariant(k12, 3) != 6)
    fail(ErrorCode::CheckFailed, "K12 is not 3-elementary with a = 6");
  return k12;
}

}  // namespace eisenlat
