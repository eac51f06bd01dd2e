#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

#include "octeig/octonion.hpp"

namespace octeig {

template <std::size_t N>
using OctVec = std::array<Octonion, N>;
using OctVec2 = OctVec<2>;
using OctVec3 = OctVec<3>;

// Dense n x n octonionic matrix. Used for non-Hermitian intermediates
// (products, vv^dagger sums, UDU^dagger assembly).
template <std::size_t N>
class OctMatrix {
 public:
  static constexpr std::size_t kSize = N;

  OctMatrix() = default;

  static OctMatrix identity() {
    OctMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = Octonion(1.0);
    return m;
  }

  Octonion& operator()(std::size_t r, std::size_t c) { return e_[r * N + c]; }
  const Octonion& operator()(std::size_t r, std::size_t c) const {
    return e_[r * N + c];
  }

  OctMatrix& operator+=(const OctMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) e_[k] += o.e_[k];
    return *this;
  }
  OctMatrix& operator-=(const OctMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) e_[k] -= o.e_[k];
    return *this;
  }
  OctMatrix& operator*=(double s) {
    for (auto& x : e_) x *= s;
    return *this;
  }

 private:
  std::array<Octonion, N * N> e_{};
};

template <std::size_t N>
OctMatrix<N> operator+(OctMatrix<N> a, const OctMatrix<N>& b) {
  return a += b;
}
template <std::size_t N>
OctMatrix<N> operator-(OctMatrix<N> a, const OctMatrix<N>& b) {
  return a -= b;
}
template <std::size_t N>
OctMatrix<N> operator*(double s, OctMatrix<N> a) {
  return a *= s;
}

/// [[p, a], [conj(a), m]]
struct Herm2 {
  double p = 0.0, m = 0.0;
  Octonion a;
};

/// [[p, a, conj(b)], [conj(a), m, c], [b, conj(c), n]]
struct Herm3 {
  double p = 0.0, m = 0.0, n = 0.0;
  Octonion a, b, c;

  static Herm3 diag(double p, double m, double n) { return {p, m, n, {}, {}, {}}; }
};

OctMatrix<2> to_matrix(const Herm2& h);
OctMatrix<3> to_matrix(const Herm3& h);

/// Reads the upper triangle; throws std::invalid_argument if the input is not
/// Hermitian to `tol` (max coefficient).
Herm2 to_herm2(const OctMatrix<2>& m, double tol = 1e-12);
Herm3 to_herm3(const OctMatrix<3>& m, double tol = 1e-12);

template <std::size_t N>
bool is_hermitian(const OctMatrix<N>& m, double tol = 1e-12) {
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = r; c < N; ++c)
      if (max_abs(m(r, c) - conj(m(c, r))) > tol) return false;
  return true;
}

// ---- vectors ---------------------------------------------------------------

template <std::size_t N>
OctVec<N> operator+(OctVec<N> v, const OctVec<N>& w) {
  for (std::size_t i = 0; i < N; ++i) v[i] += w[i];
  return v;
}
template <std::size_t N>
OctVec<N> operator-(OctVec<N> v, const OctVec<N>& w) {
  for (std::size_t i = 0; i < N; ++i) v[i] -= w[i];
  return v;
}
template <std::size_t N>
OctVec<N> operator*(OctVec<N> v, double s) {
  for (auto& x : v) x *= s;
  return v;
}

/// Right scalar multiple v q (componentwise v_i q).
template <std::size_t N>
OctVec<N> right_mul(const OctVec<N>& v, const Octonion& q) {
  OctVec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = v[i] * q;
  return r;
}

/// Left scalar multiple q v.
template <std::size_t N>
OctVec<N> left_mul(const Octonion& q, const OctVec<N>& v) {
  OctVec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = q * v[i];
  return r;
}

/// v^dagger w = sum conj(v_i) w_i
template <std::size_t N>
Octonion inner(const OctVec<N>& v, const OctVec<N>& w) {
  Octonion s;
  for (std::size_t i = 0; i < N; ++i) s += conj(v[i]) * w[i];
  return s;
}

/// Re(v^dagger v)
template <std::size_t N>
double norm_sq(const OctVec<N>& v) {
  double s = 0.0;
  for (const auto& x : v) s += norm_sq(x);
  return s;
}

template <std::size_t N>
double max_abs(const OctVec<N>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, max_abs(x));
  return m;
}

template <std::size_t N>
OctVec<N> normalized(const OctVec<N>& v) {
  return v * (1.0 / std::sqrt(norm_sq(v)));
}

// ---- matrix operations -----------------------------------------------------

/// Entry (i,k) = sum_j A(i,j) B(j,k), one octonionic product per term.
template <std::size_t N>
OctMatrix<N> matmul(const OctMatrix<N>& a, const OctMatrix<N>& b) {
  OctMatrix<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k)
      for (std::size_t j = 0; j < N; ++j) r(i, k) += a(i, j) * b(j, k);
  return r;
}

template <std::size_t N>
OctVec<N> mat_vec(const OctMatrix<N>& a, const OctVec<N>& v) {
  OctVec<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r[i] += a(i, j) * v[j];
  return r;
}

inline OctVec2 mat_vec(const Herm2& a, const OctVec2& v) {
  return mat_vec(to_matrix(a), v);
}
inline OctVec3 mat_vec(const Herm3& a, const OctVec3& v) {
  return mat_vec(to_matrix(a), v);
}

/// A o B = (AB + BA) / 2
template <std::size_t N>
OctMatrix<N> jordan_product(const OctMatrix<N>& a, const OctMatrix<N>& b) {
  OctMatrix<N> r = matmul(a, b) + matmul(b, a);
  r *= 0.5;
  return r;
}

/// vv^dagger, entries v_i conj(v_j).
template <std::size_t N>
OctMatrix<N> outer(const OctVec<N>& v) {
  OctMatrix<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = v[i] * conj(v[j]);
  return r;
}

/// u w^dagger
template <std::size_t N>
OctMatrix<N> outer(const OctVec<N>& u, const OctVec<N>& w) {
  OctMatrix<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = u[i] * conj(w[j]);
  return r;
}

template <std::size_t N>
OctMatrix<N> conj_matrix(OctMatrix<N> m) {
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = conj(m(i, j));
  return m;
}

template <std::size_t N>
OctMatrix<N> dagger(const OctMatrix<N>& m) {
  OctMatrix<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = conj(m(j, i));
  return r;
}

template <std::size_t N>
double max_abs(const OctMatrix<N>& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) s = std::max(s, max_abs(m(i, j)));
  return s;
}

inline Herm2 conj_matrix(const Herm2& h) { return {h.p, h.m, conj(h.a)}; }
inline Herm3 conj_matrix(const Herm3& h) {
  return {h.p, h.m, h.n, conj(h.a), conj(h.b), conj(h.c)};
}

/// Max absolute coefficient over all entries.
double max_abs(const Herm2& h);
double max_abs(const Herm3& h);

// ---- Jordan algebra invariants ---------------------------------------------

inline double trace(const Herm2& h) { return h.p + h.m; }
inline double trace(const Herm3& h) { return h.p + h.m + h.n; }

template <std::size_t N>
double trace(const OctMatrix<N>& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += m(i, i).real();
  return s;
}

/// pm + pn + mn - |a|^2 - |b|^2 - |c|^2
double sigma(const Herm3& h);

/// pm - |a|^2
double det2(const Herm2& h);

/// pmn + 2 Re(b(ac)) - n|a|^2 - m|b|^2 - p|c|^2
double det3(const Herm3& h);

/// tr((A*A) o A) / 3 via the Freudenthal product.
double det3_freudenthal(const Herm3& h);

/// A*B = A o B - (A tr B + B tr A)/2 + (tr A tr B - tr(A o B)) I / 2
Herm3 freudenthal_product(const Herm3& a, const Herm3& b);

Herm3 jordan_product(const Herm3& a, const Herm3& b);

/// A^3 := A^2 o A
OctMatrix<3> cube(const Herm3& h);

/// max |A^3 - (tr A) A^2 + sigma(A) A - (det A) I|
double char_residual(const Herm3& h);

/// max |A^2 - (tr A) A + (det A) I|
double char_residual(const Herm2& h);

Herm3 operator+(const Herm3& x, const Herm3& y);
Herm3 operator-(const Herm3& x, const Herm3& y);
Herm3 operator*(double s, const Herm3& x);

}  // namespace octeig
