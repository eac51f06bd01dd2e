#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "octeig/octonion.hpp"
#include "support.hpp"

namespace octeig {
namespace {

using testing::Rng;

double dist(const Octonion& x, const Octonion& y) { return max_abs(x - y); }

TEST(Octonion, QuaternionUnitsFollowIJK) {
  EXPECT_EQ(basis::i * basis::j, basis::k);
  EXPECT_EQ(basis::j * basis::k, basis::i);
  EXPECT_EQ(basis::k * basis::i, basis::j);
  EXPECT_EQ(basis::j * basis::i, -basis::k);
  for (std::size_t e = 1; e < 8; ++e)
    EXPECT_EQ(Octonion::unit(e) * Octonion::unit(e), -basis::one) << "e" << e;
}

TEST(Octonion, DoublingProductsOfL) {
  EXPECT_EQ(basis::i * basis::l, basis::il);
  EXPECT_EQ(basis::j * basis::l, basis::jl);
  EXPECT_EQ(basis::k * basis::l, basis::kl);
  EXPECT_EQ(basis::l * basis::i, -basis::il);
  EXPECT_EQ(basis::j * basis::kl, -basis::il);
  EXPECT_EQ(basis::l * basis::kl, basis::k);
}

TEST(Octonion, IdentityIsTwoSided) {
  for (std::size_t e = 0; e < 8; ++e) {
    EXPECT_EQ(basis::one * Octonion::unit(e), Octonion::unit(e));
    EXPECT_EQ(Octonion::unit(e) * basis::one, Octonion::unit(e));
  }
}

TEST(Octonion, ConjugateAndNorm) {
  const Octonion x({1, 2, -3, 4, 0, 0, 5, -6});
  const Octonion xc({1, -2, 3, -4, 0, 0, -5, 6});
  EXPECT_EQ(conj(x), xc);
  EXPECT_DOUBLE_EQ(norm_sq(x), 1 + 4 + 9 + 16 + 25 + 36);
  EXPECT_EQ(x * conj(x), Octonion(norm_sq(x)));
  EXPECT_EQ(conj(conj(x)), x);
}

TEST(Octonion, AssociatorVanishesInsideQuaternions) {
  EXPECT_EQ(associator(basis::i, basis::j, basis::k), Octonion{});
  EXPECT_EQ(associator(basis::i, basis::j, basis::l), 2.0 * basis::kl);
  EXPECT_DOUBLE_EQ(norm_sq(associator(basis::i, basis::j, basis::l)), 4.0);
}

TEST(Octonion, PhiOnBasisTriples) {
  EXPECT_DOUBLE_EQ(phi(basis::i, basis::j, basis::k), 1.0);
  EXPECT_DOUBLE_EQ(phi(basis::i, basis::j, basis::l), 0.0);
  EXPECT_DOUBLE_EQ(phi(basis::i, basis::i, basis::j), 0.0);
}

TEST(Octonion, InverseOfBasisAndZero) {
  EXPECT_EQ(inverse(basis::i), -basis::i);
  EXPECT_EQ(inverse(Octonion(2.0)), Octonion(0.5));
  EXPECT_THROW(inverse(Octonion{}), std::domain_error);
}

TEST(OctonionProperty, CompositionOnAllBasisPairs) {
  for (std::size_t p = 0; p < 8; ++p)
    for (std::size_t q = 0; q < 8; ++q) {
      const Octonion prod = Octonion::unit(p) * Octonion::unit(q);
      EXPECT_EQ(norm_sq(prod), 1.0) << p << "," << q;
      std::size_t nonzero = 0;
      for (std::size_t k = 0; k < 8; ++k) nonzero += prod[k] != 0.0;
      EXPECT_EQ(nonzero, 1u);
    }
}

TEST(OctonionProperty, CompositionOnRandomPairs) {
  Rng rng(11);
  for (int t = 0; t < 1000; ++t) {
    const Octonion a = rng.oct(), b = rng.oct();
    const double lhs = norm_sq(a * b), rhs = norm_sq(a) * norm_sq(b);
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * rhs);
  }
}

TEST(OctonionProperty, Alternativity) {
  Rng rng(12);
  for (int t = 0; t < 500; ++t) {
    const Octonion a = rng.oct(), b = rng.oct();
    EXPECT_LE(dist(a * (a * b), (a * a) * b), 1e-13);
    EXPECT_LE(dist((b * a) * a, b * (a * a)), 1e-13);
    EXPECT_LE(dist((a * b) * a, a * (b * a)), 1e-13);
  }
}

TEST(OctonionProperty, AssociatorIsAlternating) {
  Rng rng(13);
  for (int t = 0; t < 500; ++t) {
    const Octonion a = rng.oct(), b = rng.oct(), c = rng.oct();
    const Octonion abc = associator(a, b, c);
    EXPECT_LE(dist(abc, -associator(b, a, c)), 1e-13);
    EXPECT_LE(dist(abc, -associator(a, c, b)), 1e-13);
    EXPECT_LE(dist(abc, associator(b, c, a)), 1e-13);
    EXPECT_LE(std::abs(abc.real()), 1e-13);
  }
}

TEST(OctonionProperty, ConjugationFlipsAssociatorAndPhi) {
  Rng rng(14);
  for (int t = 0; t < 500; ++t) {
    const Octonion a = rng.oct(), b = rng.oct(), c = rng.oct();
    EXPECT_LE(dist(associator(conj(a), b, c), -associator(a, b, c)), 1e-13);
    EXPECT_NEAR(phi(conj(a), b, c), -phi(a, b, c), 1e-13);
  }
}

TEST(OctonionProperty, ConjugateOfProductReverses) {
  Rng rng(15);
  for (int t = 0; t < 200; ++t) {
    const Octonion a = rng.oct(), b = rng.oct();
    EXPECT_LE(dist(conj(a * b), conj(b) * conj(a)), 1e-14);
  }
}

TEST(OctonionProperty, InverseIsTwoSided) {
  Rng rng(16);
  for (int t = 0; t < 200; ++t) {
    const Octonion a = rng.oct();
    EXPECT_LE(dist(a * inverse(a), basis::one), 1e-13);
    EXPECT_LE(dist(inverse(a) * a, basis::one), 1e-13);
  }
}

TEST(OctonionProperty, LeftMultiplicationMatrix) {
  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    const Octonion a = rng.oct(), x = rng.oct();
    const RealMat8 l = left_mul_matrix(a), lc = left_mul_matrix(conj(a));
    const Octonion ax = a * x;
    for (std::size_t r = 0; r < 8; ++r) {
      double s = 0.0;
      for (std::size_t c = 0; c < 8; ++c) {
        s += l[r][c] * x[c];
        EXPECT_DOUBLE_EQ(lc[r][c], l[c][r]);
      }
      EXPECT_NEAR(s, ax[r], 1e-14);
    }
  }
}

}  // namespace
}  // namespace octeig
