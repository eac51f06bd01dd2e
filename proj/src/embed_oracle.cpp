#include "octeig/embed_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace octeig {

double RealSymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : a_) s += x * x;
  return std::sqrt(s);
}

bool RealSymMatrix::is_symmetric(double tol) const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
  return true;
}

std::vector<double> RealSymMatrix::apply(std::span<const double> x) const {
  std::vector<double> y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

namespace {

template <std::size_t N>
RealSymMatrix embed_matrix(const OctMatrix<N>& a) {
  RealSymMatrix m(8 * N);
  for (std::size_t bi = 0; bi < N; ++bi) {
    for (std::size_t bj = bi; bj < N; ++bj) {
      const RealMat8 block = left_mul_matrix(a(bi, bj));
      for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
          if (bi == bj && c < r) continue;
          const double v = block[r][c];
          m(8 * bi + r, 8 * bj + c) = v;
          m(8 * bj + c, 8 * bi + r) = v;
        }
      }
    }
  }
  return m;
}

}  // namespace

RealSymMatrix embed(const Herm2& a) { return embed_matrix(to_matrix(a)); }
RealSymMatrix embed(const Herm3& a) { return embed_matrix(to_matrix(a)); }

RealSpectrum jacobi_eigen(RealSymMatrix a) {
  const std::size_t n = a.size();
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const double target = 1e-12 * a.frobenius_norm();
  RealSpectrum out;
  for (int sweep = 0; sweep <= 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * a(i, j) * a(i, j);
    if (std::sqrt(off) <= target) {
      out.converged = true;
      out.sweeps = sweep;
      break;
    }
    if (sweep == 100) {
      out.sweeps = sweep;
      break;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p), arq = a(r, q);
          a(r, p) = a(p, r) = c * arp - s * arq;
          a(r, q) = a(q, r) = s * arp + c * arq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p], vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  for (std::size_t k : order) {
    out.eigenvalues.push_back(a(k, k));
    std::vector<double> col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = v[r * n + k];
    out.eigenvectors.push_back(std::move(col));
  }
  return out;
}

std::vector<Cluster> cluster_eigenvalues(std::span<const double> sorted, double gap) {
  std::vector<Cluster> out;
  double sum = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (k == 0 || sorted[k] - sorted[k - 1] > gap) {
      if (!out.empty()) out.back().value = sum / out.back().count;
      out.push_back({sorted[k], 0});
      sum = 0.0;
    }
    sum += sorted[k];
    ++out.back().count;
  }
  if (!out.empty()) out.back().value = sum / out.back().count;
  return out;
}

std::vector<Cluster> spectrum_with_multiplicity(const Herm2& a) {
  const RealSpectrum s = jacobi_eigen(embed(a));
  return cluster_eigenvalues(s.eigenvalues, 1e-7 * (1.0 + max_abs(a)));
}

std::vector<Cluster> spectrum_with_multiplicity(const Herm3& a) {
  const RealSpectrum s = jacobi_eigen(embed(a));
  return cluster_eigenvalues(s.eigenvalues, 1e-7 * (1.0 + max_abs(a)));
}

std::vector<OctVec3> kernel_basis(const Herm3& a, double lambda) {
  const RealSpectrum s = jacobi_eigen(embed(a));
  const double norm = max_abs(a);
  const double tol = 1e-7 * (norm > 0.0 ? norm : 1.0);
  std::vector<OctVec3> out;
  for (std::size_t k = 0; k < s.eigenvalues.size(); ++k)
    if (std::abs(s.eigenvalues[k] - lambda) <= tol)
      out.push_back(lift<3>(s.eigenvectors[k]));
  return out;
}

}  // namespace octeig
