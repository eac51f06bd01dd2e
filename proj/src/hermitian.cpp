#include "octeig/hermitian.hpp"

#include <stdexcept>

namespace octeig {

OctMatrix<2> to_matrix(const Herm2& h) {
  OctMatrix<2> m;
  m(0, 0) = Octonion(h.p);
  m(0, 1) = h.a;
  m(1, 0) = conj(h.a);
  m(1, 1) = Octonion(h.m);
  return m;
}

OctMatrix<3> to_matrix(const Herm3& h) {
  OctMatrix<3> m;
  m(0, 0) = Octonion(h.p);
  m(0, 1) = h.a;
  m(0, 2) = conj(h.b);
  m(1, 0) = conj(h.a);
  m(1, 1) = Octonion(h.m);
  m(1, 2) = h.c;
  m(2, 0) = h.b;
  m(2, 1) = conj(h.c);
  m(2, 2) = Octonion(h.n);
  return m;
}

namespace {
void require_hermitian(bool ok) {
  if (!ok) throw std::invalid_argument("matrix is not Hermitian");
}
}  // namespace

Herm2 to_herm2(const OctMatrix<2>& m, double tol) {
  require_hermitian(is_hermitian(m, tol) &&
                    max_abs(m(0, 0).imag()) <= tol &&
                    max_abs(m(1, 1).imag()) <= tol);
  return {m(0, 0).real(), m(1, 1).real(), m(0, 1)};
}

Herm3 to_herm3(const OctMatrix<3>& m, double tol) {
  require_hermitian(is_hermitian(m, tol));
  for (std::size_t i = 0; i < 3; ++i)
    require_hermitian(max_abs(m(i, i).imag()) <= tol);
  return {m(0, 0).real(), m(1, 1).real(), m(2, 2).real(),
          m(0, 1),        conj(m(0, 2)),  m(1, 2)};
}

double max_abs(const Herm2& h) {
  return std::max({std::abs(h.p), std::abs(h.m), max_abs(h.a)});
}

double max_abs(const Herm3& h) {
  return std::max({std::abs(h.p), std::abs(h.m), std::abs(h.n), max_abs(h.a),
                   max_abs(h.b), max_abs(h.c)});
}

double sigma(const Herm3& h) {
  return h.p * h.m + h.p * h.n + h.m * h.n - norm_sq(h.a) - norm_sq(h.b) -
         norm_sq(h.c);
}

double det2(const Herm2& h) { return h.p * h.m - norm_sq(h.a); }

double det3(const Herm3& h) {
  const double bac = (h.b * (h.a * h.c)).real();
  return h.p * h.m * h.n + 2.0 * bac - h.n * norm_sq(h.a) -
         h.m * norm_sq(h.b) - h.p * norm_sq(h.c);
}

Herm3 jordan_product(const Herm3& a, const Herm3& b) {
  // The Jordan product of Hermitian matrices is Hermitian; the tolerance only
  // absorbs rounding in the symmetric halves.
  return to_herm3(jordan_product(to_matrix(a), to_matrix(b)), 1e-9 * (1.0 + max_abs(a) * max_abs(b)));
}

Herm3 freudenthal_product(const Herm3& a, const Herm3& b) {
  const Herm3 ab = jordan_product(a, b);
  const double ta = trace(a), tb = trace(b);
  const double s = 0.5 * (ta * tb - trace(ab));
  Herm3 r = ab - 0.5 * (tb * a + ta * b);
  r.p += s;
  r.m += s;
  r.n += s;
  return r;
}

double det3_freudenthal(const Herm3& h) {
  return trace(jordan_product(freudenthal_product(h, h), h)) / 3.0;
}

OctMatrix<3> cube(const Herm3& h) {
  const OctMatrix<3> a = to_matrix(h);
  return jordan_product(jordan_product(a, a), a);
}

double char_residual(const Herm3& h) {
  const OctMatrix<3> a = to_matrix(h);
  const OctMatrix<3> a2 = jordan_product(a, a);
  const OctMatrix<3> a3 = jordan_product(a2, a);
  OctMatrix<3> lhs = a3 - trace(h) * a2 + sigma(h) * a;
  lhs -= det3(h) * OctMatrix<3>::identity();
  return max_abs(lhs);
}

double char_residual(const Herm2& h) {
  const OctMatrix<2> a = to_matrix(h);
  OctMatrix<2> lhs = matmul(a, a) - trace(h) * a;
  lhs += det2(h) * OctMatrix<2>::identity();
  return max_abs(lhs);
}

Herm3 operator+(const Herm3& x, const Herm3& y) {
  return {x.p + y.p, x.m + y.m, x.n + y.n, x.a + y.a, x.b + y.b, x.c + y.c};
}

Herm3 operator-(const Herm3& x, const Herm3& y) {
  return {x.p - y.p, x.m - y.m, x.n - y.n, x.a - y.a, x.b - y.b, x.c - y.c};
}

Herm3 operator*(double s, const Herm3& x) {
  return {s * x.p, s * x.m, s * x.n, s * x.a, s * x.b, s * x.c};
}

}  // namespace octeig
