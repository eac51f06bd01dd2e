#include "octeig/octonion.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace octeig {
namespace {

// Quaternion halves with ij = k.
struct Quat {
  double w, x, y, z;
};

constexpr Quat qmul(const Quat& a, const Quat& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quat qconj(const Quat& a) { return {a.w, -a.x, -a.y, -a.z}; }

constexpr Quat lo(const Octonion& o) { return {o[0], o[1], o[2], o[3]}; }
constexpr Quat hi(const Octonion& o) { return {o[4], o[5], o[6], o[7]}; }

}  // namespace

Octonion operator*(const Octonion& lhs, const Octonion& rhs) {
  const Quat a = lo(lhs), b = hi(lhs), c = lo(rhs), d = hi(rhs);
  const Quat ac = qmul(a, c);
  const Quat db = qmul(qconj(d), b);
  const Quat da = qmul(d, a);
  const Quat bc = qmul(b, qconj(c));
  return Octonion(Octonion::Coeffs{ac.w - db.w, ac.x - db.x, ac.y - db.y,
                                   ac.z - db.z, da.w + bc.w, da.x + bc.x,
                                   da.y + bc.y, da.z + bc.z});
}

double norm(const Octonion& a) { return std::sqrt(norm_sq(a)); }

double max_abs(const Octonion& a) {
  double m = 0.0;
  for (double x : a.coeffs()) m = std::max(m, std::abs(x));
  return m;
}

Octonion commutator(const Octonion& a, const Octonion& b) {
  return a * b - b * a;
}

Octonion associator(const Octonion& a, const Octonion& b,
                    const Octonion& c) {
  return (a * b) * c - a * (b * c);
}

double phi(const Octonion& a, const Octonion& b, const Octonion& c) {
  return 0.5 * (commutator(a, conj(b)) * c).real();
}

Octonion triple_cross(const Octonion& a, const Octonion& b,
                      const Octonion& c) {
  const Octonion bb = conj(b);
  return 0.5 * (a * (bb * c) - c * (bb * a));
}

Octonion inverse(const Octonion& a) {
  const double n2 = norm_sq(a);
  if (n2 == 0.0) throw std::domain_error("inverse of zero octonion");
  return conj(a) / n2;
}

RealMat8 left_mul_matrix(const Octonion& a) {
  RealMat8 m{};
  for (std::size_t col = 0; col < 8; ++col) {
    const Octonion p = a * Octonion::unit(col);
    for (std::size_t row = 0; row < 8; ++row) m[row][col] = p[row];
  }
  return m;
}

std::ostream& operator<<(std::ostream& os, const Octonion& a) {
  os << '[';
  for (std::size_t k = 0; k < 8; ++k) os << (k ? ", " : "") << a[k];
  return os << ']';
}

}  // namespace octeig
