#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "octeig/hermitian.hpp"

namespace octeig {

// Dense real symmetric matrix, row-major.
class RealSymMatrix {
 public:
  RealSymMatrix() = default;
  explicit RealSymMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  double frobenius_norm() const;
  bool is_symmetric(double tol = 1e-14) const;
  std::vector<double> apply(std::span<const double> x) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

struct RealSpectrum {
  std::vector<double> eigenvalues;                // ascending
  std::vector<std::vector<double>> eigenvectors;  // eigenvectors[k] pairs with eigenvalues[k]
  int sweeps = 0;
  bool converged = false;
};

/// n x n octonionic Hermitian matrix as an 8n x 8n real symmetric matrix whose
/// (i,j) block is left_mul_matrix(A_ij).
RealSymMatrix embed(const Herm2& a);
RealSymMatrix embed(const Herm3& a);

/// Cyclic Jacobi rotations (row-major upper-triangle order) until the
/// off-diagonal norm drops below 1e-12 ||M||, at most 100 sweeps.
RealSpectrum jacobi_eigen(RealSymMatrix m);

struct Cluster {
  double value;
  int count;
};

/// Groups sorted eigenvalues, starting a new cluster whenever the gap to the
/// previous value exceeds `gap`.
std::vector<Cluster> cluster_eigenvalues(std::span<const double> sorted, double gap);

/// Embedding spectrum clustered with gap 1e-7 (1 + ||A||).
std::vector<Cluster> spectrum_with_multiplicity(const Herm2& a);
std::vector<Cluster> spectrum_with_multiplicity(const Herm3& a);

template <std::size_t N>
std::vector<double> coords(const OctVec<N>& v) {
  std::vector<double> x(8 * N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < 8; ++k) x[8 * i + k] = v[i][k];
  return x;
}

/// Inverse of coords. Throws std::invalid_argument unless x.size() == 8N.
template <std::size_t N>
OctVec<N> lift(std::span<const double> x) {
  if (x.size() != 8 * N) throw std::invalid_argument("lift: bad coordinate length");
  OctVec<N> v;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < 8; ++k) v[i][k] = x[8 * i + k];
  return v;
}

/// Real-orthonormal basis of the eigenspace of embed(A) at `lambda`, lifted to
/// O^3. Empty when lambda is not an eigenvalue (cluster tolerance 1e-7 scale).
std::vector<OctVec3> kernel_basis(const Herm3& a, double lambda);

}  // namespace octeig
