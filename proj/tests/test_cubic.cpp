#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "octeig/cubic.hpp"

namespace octeig {
namespace {

// Coefficients of (x - r0)(x - r1)(x - r2).
std::array<double, 3> from_roots(double r0, double r1, double r2) {
  return {-(r0 + r1 + r2), r0 * r1 + r0 * r2 + r1 * r2, -r0 * r1 * r2};
}

void expect_roots(double r0, double r1, double r2, double tol) {
  const auto c = from_roots(r0, r1, r2);
  std::array<double, 3> want{r0, r1, r2};
  std::sort(want.begin(), want.end());
  const auto got = real_cubic_roots(c[0], c[1], c[2]);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(got[k], want[k], tol) << k;
}

TEST(Cubic, DistinctRoots) { expect_roots(-2, 1, 3, 1e-13); }

TEST(Cubic, DoubleRootsAreExact) {
  // l^3 - 3l - 2 = (l - 2)(l + 1)^2 and l^3 - 3l + 2 = (l - 1)^2 (l + 2)
  const auto a = real_cubic_roots(0, -3, -2);
  EXPECT_DOUBLE_EQ(a[0], -1);
  EXPECT_DOUBLE_EQ(a[1], -1);
  EXPECT_DOUBLE_EQ(a[2], 2);
  const auto b = real_cubic_roots(0, -3, 2);
  EXPECT_DOUBLE_EQ(b[0], -2);
  EXPECT_DOUBLE_EQ(b[1], 1);
  EXPECT_DOUBLE_EQ(b[2], 1);
}

TEST(Cubic, TripleRoot) {
  const auto r = real_cubic_roots(-3, 3, -1);
  for (double x : r) EXPECT_NEAR(x, 1.0, 1e-12);
}

TEST(Cubic, ZeroPolynomialRoots) {
  const auto r = real_cubic_roots(0, 0, 0);
  for (double x : r) EXPECT_EQ(x, 0.0);
}

TEST(Cubic, WidelySeparatedRoots) { expect_roots(-1e4, 1e-3, 2e4, 1e-8); }

TEST(CubicProperty, RandomRootTriples) {
  std::mt19937_64 gen(31);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int t = 0; t < 2000; ++t) expect_roots(u(gen), u(gen), u(gen), 1e-6);
}

TEST(CubicProperty, NearDoubleRootsStayOrdered) {
  std::mt19937_64 gen(32);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int t = 0; t < 500; ++t) {
    const double r = u(gen), s = u(gen);
    const auto c = from_roots(r, r + 1e-9, s);
    const auto got = real_cubic_roots(c[0], c[1], c[2]);
    std::array<double, 3> want{r, r + 1e-9, s};
    std::sort(want.begin(), want.end());
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
    // A double root is only determined to about sqrt(eps) of the coefficients.
    for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(got[k], want[k], 1e-5);
  }
}

}  // namespace
}  // namespace octeig
