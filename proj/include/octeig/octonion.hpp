#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>

namespace octeig {

// Octonion with real coefficients on the ordered basis
// (1, i, j, k, l, il, jl, kl). Multiplication follows the Cayley-Dickson
// doubling O = H + Hl with (a + bl)(c + dl) = (ac - conj(d)b) + (da + b conj(c))l.
class Octonion {
 public:
  static constexpr std::size_t kDim = 8;
  using Coeffs = std::array<double, kDim>;

  constexpr Octonion() = default;
  constexpr explicit Octonion(double re) : c_{re, 0, 0, 0, 0, 0, 0, 0} {}
  constexpr explicit Octonion(const Coeffs& c) : c_(c) {}

  static constexpr Octonion unit(std::size_t k) {
    Coeffs c{};
    c[k] = 1.0;
    return Octonion(c);
  }

  constexpr double operator[](std::size_t k) const { return c_[k]; }
  constexpr double& operator[](std::size_t k) { return c_[k]; }
  constexpr const Coeffs& coeffs() const { return c_; }

  constexpr double real() const { return c_[0]; }
  constexpr Octonion imag() const {
    Octonion r(*this);
    r.c_[0] = 0.0;
    return r;
  }

  constexpr Octonion& operator+=(const Octonion& o) {
    for (std::size_t k = 0; k < kDim; ++k) c_[k] += o.c_[k];
    return *this;
  }
  constexpr Octonion& operator-=(const Octonion& o) {
    for (std::size_t k = 0; k < kDim; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  constexpr Octonion& operator*=(double s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  constexpr Octonion& operator/=(double s) {
    for (auto& x : c_) x /= s;
    return *this;
  }

  friend constexpr bool operator==(const Octonion&, const Octonion&) = default;

 private:
  Coeffs c_{};
};

constexpr Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
constexpr Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
constexpr Octonion operator-(Octonion a) { return a *= -1.0; }
constexpr Octonion operator*(Octonion a, double s) { return a *= s; }
constexpr Octonion operator*(double s, Octonion a) { return a *= s; }
constexpr Octonion operator/(Octonion a, double s) { return a /= s; }

/// Octonionic product (nonassociative, noncommutative).
Octonion operator*(const Octonion& a, const Octonion& b);

inline Octonion mul(const Octonion& a, const Octonion& b) { return a * b; }

constexpr Octonion conj(Octonion a) {
  for (std::size_t k = 1; k < Octonion::kDim; ++k) a[k] = -a[k];
  return a;
}

constexpr double norm_sq(const Octonion& a) {
  double s = 0.0;
  for (double x : a.coeffs()) s += x * x;
  return s;
}

double norm(const Octonion& a);

/// Largest absolute coefficient; the tolerance norm used throughout.
double max_abs(const Octonion& a);

/// [a,b] = ab - ba
Octonion commutator(const Octonion& a, const Octonion& b);

/// [a,b,c] = (ab)c - a(bc)
Octonion associator(const Octonion& a, const Octonion& b, const Octonion& c);

/// Associative 3-form: 1/2 Re([a, conj(b)] c). Totally antisymmetric.
double phi(const Octonion& a, const Octonion& b, const Octonion& c);

/// Triple cross product 1/2 (a(conj(b)c) - c(conj(b)a)); its real part is phi.
Octonion triple_cross(const Octonion& a, const Octonion& b, const Octonion& c);

/// Throws std::domain_error for a == 0.
Octonion inverse(const Octonion& a);

using RealMat8 = std::array<std::array<double, 8>, 8>;

/// Matrix L with L * coords(x) == coords(a * x). L(conj(a)) == L(a)^T.
RealMat8 left_mul_matrix(const Octonion& a);

std::ostream& operator<<(std::ostream& os, const Octonion& a);

namespace basis {
inline constexpr Octonion one = Octonion::unit(0);
inline constexpr Octonion i = Octonion::unit(1);
inline constexpr Octonion j = Octonion::unit(2);
inline constexpr Octonion k = Octonion::unit(3);
inline constexpr Octonion l = Octonion::unit(4);
inline constexpr Octonion il = Octonion::unit(5);
inline constexpr Octonion jl = Octonion::unit(6);
inline constexpr Octonion kl = Octonion::unit(7);
}  // namespace basis

}  // namespace octeig
