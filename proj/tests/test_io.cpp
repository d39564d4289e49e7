#include <gtest/gtest.h>

#include "eisenlat/io.hpp"
#include "eisenlat/standard.hpp"
#include "eisenlat/smith.hpp"

using namespace eisenlat;

namespace {

std::string parse_message(std::string_view text) {
  try {
    parse_matrix_text(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    return e.what();
  }
  ADD_FAILURE() << "no parse error";
  return {};
}

}  // namespace

TEST(TextFormat, ParsesWithComments) {
  IntMatrix m = parse_matrix_text("# A2\n2\n-2 1   # first row\n\n 1 -2\n");
  EXPECT_EQ(m, (IntMatrix{{-2, 1}, {1, -2}}));
  IntMatrix r = parse_matrix_text("2 3\n1 2 3\n4 5 6");
  EXPECT_EQ(r.rows(), 2u);
  EXPECT_EQ(r.cols(), 3u);
  EXPECT_EQ(r(1, 2), 6);
  IntMatrix big = parse_matrix_text("1\n123456789012345678901234567890\n");
  EXPECT_EQ(to_string(big(0, 0)), "123456789012345678901234567890");
}

TEST(TextFormat, ErrorsCarryPosition) {
  EXPECT_NE(parse_message("2\n1 x\n0 1\n").find("line 2, column 3"), std::string::npos);
  EXPECT_NE(parse_message("2\n1 0\n").find("line"), std::string::npos);
  EXPECT_NE(parse_message("2\n1 0 0\n0 1\n").find("line 2, column 5"), std::string::npos);
  EXPECT_NE(parse_message("").find("header"), std::string::npos);
  EXPECT_NE(parse_message("1\n1\n2\n").find("line 3"), std::string::npos);
  EXPECT_NE(parse_message("1 2 3\n").find("line 1, column 5"), std::string::npos);
}

TEST(TextFormat, RoundTrip) {
  IntMatrix m = {{0, -1, 7}, {12, 0, -3}};
  EXPECT_EQ(parse_matrix_text(format_matrix_text(m)), m);
  IntMatrix sq = {{-2, 1}, {1, -2}};
  EXPECT_EQ(format_matrix_text(sq), "2\n-2 1\n1 -2\n");
}

TEST(TextFormat, GramChecks) {
  Lattice l = parse_gram_text("2\n0 1\n1 0\n", "U");
  EXPECT_EQ(l.name(), "U");
  EXPECT_THROW(parse_gram_text("2\n1 0\n0 1\n"), Error);
  EXPECT_THROW(parse_gram_text("1 2\n0 1\n"), Error);
  EXPECT_THROW(read_matrix_file("/nonexistent/x.txt"), Error);
}

TEST(Json, MatrixRoundTrip) {
  IntMatrix m = {{1, -2}, {3, 4}};
  m(0, 0) = Integer(1) << 70;
  Json j = matrix_to_json(m);
  EXPECT_TRUE(j[0][0].is_string());
  EXPECT_TRUE(j[0][1].is_number_integer());
  EXPECT_EQ(matrix_from_json(j), m);
  EXPECT_EQ(matrix_from_json(Json::parse("[[1, \"2\"], [3, 4]]")), (IntMatrix{{1, 2}, {3, 4}}));
  EXPECT_THROW(matrix_from_json(Json::parse("[[1, 2], [3]]")), Error);
}

TEST(Json, Lattice) {
  Lattice a2 = standard_lattice("A2");
  Json j = lattice_to_json(a2);
  EXPECT_EQ(j["rank"], 2);
  EXPECT_EQ(j["det"], 3);
  EXPECT_EQ(j["signature"], Json::parse("[0, 2, 0]"));
  EXPECT_EQ(j["invariant_factors"], Json::parse("[3]"));
  EXPECT_EQ(lattice_from_json(j), a2);
  EXPECT_TRUE(lattice_to_json(make_lattice(IntMatrix(2, 2)))["invariant_factors"].is_null());
  j["det"] = 4;
  EXPECT_THROW(lattice_from_json(j), Error);
}

TEST(Json, EisNumAndReports) {
  EisNum z{Rational(-1, 3), 2};
  Json j = to_json(z);
  EXPECT_EQ(j["a"], "-1/3");
  EXPECT_EQ(eis_from_json(j), z);
  Json t = to_json(FixedLocusType{3, 0, std::nullopt, 7, 7});
  EXPECT_TRUE(t["g"].is_null());
  Json s = to_json(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}));
  EXPECT_EQ(s["invariant_factors"], Json::parse("[1, 6]"));
}
