#include <gtest/gtest.h>

#include <string>

#include "octeig/matrix_file.hpp"

namespace octeig {
namespace {

const char* kWorked = R"({"dim": 3, "diag": [0, 0, 0],
  "a": [0, 1, 0, 0, 0, 0, 0, 0], "b": [0, 0, 1, 0, 0, 0, 0, 0], "c": [0, 0, 0, 0, 1, 0, 0, 0]})";

TEST(MatrixFile, ParsesThreeByThree) {
  const MatrixInput m = parse_matrix(kWorked);
  ASSERT_TRUE(std::holds_alternative<Herm3>(m));
  const Herm3& h = std::get<Herm3>(m);
  EXPECT_EQ(h.a, basis::i);
  EXPECT_EQ(h.b, basis::j);
  EXPECT_EQ(h.c, basis::l);
  EXPECT_EQ(h.p + h.m + h.n, 0.0);
}

TEST(MatrixFile, ParsesTwoByTwo) {
  const MatrixInput m = parse_matrix(R"({"dim": 2, "diag": [1, -2], "a": [0, 0, 0, 0, 0, 0, 0, 3]})");
  ASSERT_TRUE(std::holds_alternative<Herm2>(m));
  EXPECT_EQ(std::get<Herm2>(m).a, 3.0 * basis::kl);
  EXPECT_EQ(std::get<Herm2>(m).m, -2.0);
}

TEST(MatrixFile, AcceptsOctonionDiagonalWithZeroImaginaryPart) {
  const MatrixInput m = parse_matrix(
      R"({"dim": 2, "diag": [[4, 0, 0, 0, 0, 0, 0, 0], 1], "a": [0, 0, 0, 0, 0, 0, 0, 0]})");
  EXPECT_EQ(std::get<Herm2>(m).p, 4.0);
}

TEST(MatrixFile, Rejections) {
  const char* bad[] = {
      "not json",
      "[1, 2]",
      R"({"diag": [0, 0], "a": [0,0,0,0,0,0,0,0]})",
      R"({"dim": 4, "diag": [0, 0], "a": [0,0,0,0,0,0,0,0]})",
      R"({"dim": 2.5, "diag": [0, 0], "a": [0,0,0,0,0,0,0,0]})",
      R"({"dim": 2, "diag": [0], "a": [0,0,0,0,0,0,0,0]})",
      R"({"dim": 2, "diag": [0, 0], "a": [0,0,0]})",
      R"({"dim": 2, "diag": [0, 0], "a": [0,0,0,0,0,0,0,"x"]})",
      R"({"dim": 2, "diag": [[1, 1, 0, 0, 0, 0, 0, 0], 0], "a": [0,0,0,0,0,0,0,0]})",
      R"({"dim": 2, "diag": ["1", 0], "a": [0,0,0,0,0,0,0,0]})",
      R"({"dim": 2, "diag": [0, 0], "a": [0,0,0,0,0,0,0,0], "b": [0,0,0,0,0,0,0,0]})",
      R"({"dim": 3, "diag": [0, 0, 0], "a": [0,0,0,0,0,0,0,0], "b": [0,0,0,0,0,0,0,0]})",
  };
  for (const char* text : bad) EXPECT_THROW(parse_matrix(text), ParseError) << text;
  EXPECT_THROW(read_matrix_file("/nonexistent/matrix.json"), ParseError);
}

TEST(MatrixFile, RoundTwelveDigits) {
  EXPECT_EQ(round12(1.0 / 3.0), 0.333333333333);
  EXPECT_EQ(round12(2.0), 2.0);
  EXPECT_EQ(round12(-123456.7890123456), -123456.789012);
}

TEST(MatrixFile, SerializeRoundTrip) {
  const Herm3 h = random_herm3(77, MatrixClass::kOctonionic, 3.0);
  const std::string text = serialize_matrix(h);
  const Herm3 back = std::get<Herm3>(parse_matrix(text));
  EXPECT_EQ(max_abs(back - h), 0.0);
  EXPECT_EQ(serialize_matrix(back), text);
}

TEST(MatrixFile, ClassNames) {
  EXPECT_EQ(parse_matrix_class("complex"), MatrixClass::kComplex);
  EXPECT_EQ(parse_matrix_class("quaternionic"), MatrixClass::kQuaternionic);
  EXPECT_EQ(parse_matrix_class("octonionic"), MatrixClass::kOctonionic);
  EXPECT_THROW(parse_matrix_class("real"), ParseError);
}

TEST(RandomMatrix, Deterministic) {
  EXPECT_EQ(serialize_matrix(random_herm3(5, MatrixClass::kOctonionic)),
            serialize_matrix(random_herm3(5, MatrixClass::kOctonionic)));
  EXPECT_NE(serialize_matrix(random_herm3(5, MatrixClass::kOctonionic)),
            serialize_matrix(random_herm3(6, MatrixClass::kOctonionic)));
}

// Frozen stream values: mt19937_64, top 53 bits, scale (2u - 1), 12 digits.
TEST(RandomMatrix, FrozenQuaternionicSeedOne) {
  const Herm3 h = random_herm3(1, MatrixClass::kQuaternionic);
  EXPECT_EQ(h.p, -0.732246711975);
  EXPECT_EQ(h.m, -0.727185927268);
  EXPECT_EQ(h.n, -0.0975701923109);
  EXPECT_EQ(h.a[0], -0.957951543167);
  EXPECT_EQ(h.c[3], -0.162662941282);
}

TEST(RandomMatrix, ClassControlsPopulatedSlots) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Herm3 c = random_herm3(seed, MatrixClass::kComplex);
    const Herm3 q = random_herm3(seed, MatrixClass::kQuaternionic);
    const Herm3 o = random_herm3(seed, MatrixClass::kOctonionic, 2.0);
    for (std::size_t k = 2; k < 8; ++k) EXPECT_EQ(c.a[k] + c.b[k] + c.c[k], 0.0);
    for (std::size_t k = 4; k < 8; ++k) EXPECT_EQ(q.a[k] + q.b[k] + q.c[k], 0.0);
    EXPECT_GT(norm(associator(o.a, o.b, o.c)), 1e-3 * 8.0);
    EXPECT_LE(max_abs(o), 2.0);
    const Herm2 t = random_herm2(seed, MatrixClass::kOctonionic);
    EXPECT_LE(max_abs(t), 1.0);
  }
}

}  // namespace
}  // namespace octeig
