#pragma once

// Shared helpers for the unit tests and the acceptance runner.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "octeig/eigensolve.hpp"
#include "octeig/embed_oracle.hpp"
#include "octeig/matrix_file.hpp"

namespace octeig::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }

  // `slots` leading coefficients populated: 2 complex, 4 quaternionic, 8 full.
  Octonion oct(double scale = 1.0, std::size_t slots = 8) {
    Octonion o;
    for (std::size_t k = 0; k < slots; ++k) o[k] = scale * uniform();
    return o;
  }

  template <std::size_t N>
  OctVec<N> vec(double scale = 1.0) {
    OctVec<N> v;
    for (auto& x : v) x = oct(scale);
    return v;
  }

  Herm2 herm2(double scale = 1.0) { return {scale * uniform(), scale * uniform(), oct(scale)}; }

  Herm3 herm3(double scale = 1.0, std::size_t slots = 8) {
    return {scale * uniform(), scale * uniform(), scale * uniform(),
            oct(scale, slots), oct(scale, slots), oct(scale, slots)};
  }

 private:
  std::mt19937_64 gen_;
};

// p = m = n = 0, a = i, b = j, c = l.
inline Herm3 worked_example() { return {0, 0, 0, basis::i, basis::j, basis::l}; }

// Collapses the middle eigenvalue of A's r+ family onto the lowest one:
// B = l1 v1 v1^dagger + l1 v2 v2^dagger + l3 v3 v3^dagger. v1 and v2 remain
// eigenvectors of B with the shared eigenvalue l1.
inline Herm3 forced_repeated(const Herm3& a) {
  const Family f = solve3(a).families.front();
  const OctMatrix<3> m = f.lambdas[0] * outer(f.eigvecs[0]) + f.lambdas[0] * outer(f.eigvecs[1]) +
                         f.lambdas[2] * outer(f.eigvecs[2]);
  return to_herm3(m, 1e-9 * (1.0 + max_abs(a)));
}

// Classical quaternionic solution: A restricted to H^3 (4 real coordinates per
// slot) and diagonalized as a 12 x 12 real symmetric matrix. Requires a, b, c
// quaternionic. Eigenvectors are lifted back to OctVec3 with zero l-part.
struct QuaternionicSpectrum {
  std::vector<double> eigenvalues;  // 12, ascending
  std::vector<OctVec3> eigenvectors;
};

inline QuaternionicSpectrum classical_quaternionic(const Herm3& h) {
  const OctMatrix<3> a = to_matrix(h);
  RealSymMatrix m(12);
  for (std::size_t bi = 0; bi < 3; ++bi)
    for (std::size_t bj = 0; bj < 3; ++bj) {
      const RealMat8 l = left_mul_matrix(a(bi, bj));
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) m(4 * bi + r, 4 * bj + c) = l[r][c];
    }
  for (std::size_t r = 0; r < 12; ++r)
    for (std::size_t c = r + 1; c < 12; ++c) m(r, c) = m(c, r) = 0.5 * (m(r, c) + m(c, r));
  const RealSpectrum s = jacobi_eigen(m);
  QuaternionicSpectrum out;
  out.eigenvalues = s.eigenvalues;
  for (const auto& q : s.eigenvectors) {
    OctVec3 v;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 4; ++k) v[i][k] = q[4 * i + k];
    out.eigenvectors.push_back(v);
  }
  return out;
}

// Distance from v to the right-phase orbit {w xi}: xi = (w^dagger v) / |w|^2.
inline double right_phase_distance(const OctVec3& v, const OctVec3& w) {
  const Octonion xi = inner(w, v) / norm_sq(w);
  return max_abs(v - right_mul(w, xi));
}

// Largest coefficient outside the quaternion slots (1, i, j, k).
inline double l_part(const OctVec3& v) {
  double m = 0.0;
  for (const auto& x : v)
    for (std::size_t k = 4; k < 8; ++k) m = std::max(m, std::abs(x[k]));
  return m;
}

}  // namespace octeig::testing
