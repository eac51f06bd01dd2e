#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "octeig/hermitian.hpp"

namespace octeig {

/// Raised when a solver post-condition (residual, orthonormality) cannot be
/// met. Not expected for valid input.
class SolverDefect : public std::runtime_error {
 public:
  explicit SolverDefect(const std::string& what) : std::runtime_error(what) {}
};

/// Residual tolerances scale with 1 + max_abs(A).
inline double eigen_tolerance(double norm) { return 1e-9 * (1.0 + norm); }
inline double reconstruction_tolerance(double norm) { return 1e-8 * (1.0 + norm); }

// ---- 2x2 -------------------------------------------------------------------

struct EigenPair2 {
  double lambda = 0.0;
  OctVec2 v;
};

/// Roots of l^2 - (tr A) l + det A = 0, ascending.
std::array<double, 2> eigenvalues2(const Herm2& a);

/// (|a|^2, conj(a)(lambda - p))^T xi. Throws std::invalid_argument for a == 0.
OctVec2 eigenvector2(const Herm2& a, double lambda, const Octonion& xi);

/// Orthonormal eigenpairs, ascending in lambda (xi = 1; a == 0 gives e1, e2).
std::array<EigenPair2, 2> decompose2(const Herm2& a);

/// w - (vv^dagger) w / (v^dagger v). Throws std::invalid_argument for v == 0.
OctVec2 gram_schmidt2(const OctVec2& v, const OctVec2& w);

// ---- 3x3 -------------------------------------------------------------------

// One root r of r^2 + 4 phi(a,b,c) r - |[a,b,c]|^2 = 0 with its three real
// eigenvalues (ascending) and one unit eigenvector per eigenvalue, mutually
// orthogonal in the (vv^dagger) w = 0 sense.
struct Family {
  double r = 0.0;
  std::array<double, 3> lambdas{};
  std::array<OctVec3, 3> eigvecs{};
};

struct Spectrum3 {
  // families[0] is the r+ (larger root) branch. A single family flagged
  // `doubled` is returned when both roots coincide (a, b, c associate and
  // phi vanishes); each of its eigenvalues then has multiplicity 8.
  std::vector<Family> families;
  bool doubled = false;
};

/// {r+, r-} with r+ >= r-.
std::pair<double, double> r_roots(const Herm3& a);

/// Ascending roots of l^3 - (tr A) l^2 + sigma(A) l - det A = r.
std::array<double, 3> family_eigenvalues(const Herm3& a, double r);

/// Real-orthonormal basis (in the 24-dimensional real sense) of the
/// eigenspace at lambda within the family r. Four vectors generically.
std::vector<OctVec3> eigenspace_basis3(const Herm3& a, double lambda, double r);

/// Family decomposition for root r: sum l_i v_i v_i^dagger == A.
Family decompose3(const Herm3& a, double r);

/// Both families (or a single doubled family).
Spectrum3 solve3(const Herm3& a);

/// X = A - alpha vv^dagger.
Herm3 repeated_eigen_split(const Herm3& a, const OctVec3& v, double alpha);

/// b(a(cz)) + conj(c)(conj(a)(conj(b)z)) - [b(ac) + (conj(c)conj(a))conj(b)] z
Octonion rreal_rhs(const Octonion& a, const Octonion& b, const Octonion& c,
                   const Octonion& z);

/// det(lambda I - A) z minus rreal_rhs(a, b, c, z).
Octonion charlam_residual(const Herm3& a, double lambda, const Octonion& z);

/// The r for which rreal_rhs(w) = r w, read off the largest component w of
/// the eigenvector (cyclically relabelling a, b, c for the x and y slots).
double r_of(const Herm3& a, const OctVec3& v);

// ---- shared checks ---------------------------------------------------------

struct OrthoCheck {
  bool orthogonal = false;
  double residual = 0.0;
};

/// w is orthogonal to v when (vv^dagger) w == 0.
template <std::size_t N>
OrthoCheck is_orthogonal(const OctVec<N>& v, const OctVec<N>& w, double tol = 1e-9) {
  const double res = max_abs(mat_vec(outer(v), w));
  return {res <= tol, res};
}

/// max |Av - v lambda|
template <std::size_t N>
double verify_right_eigen(const OctMatrix<N>& a, const OctVec<N>& v, const Octonion& lambda) {
  return max_abs(mat_vec(a, v) - right_mul(v, lambda));
}
inline double verify_right_eigen(const Herm2& a, const OctVec2& v, const Octonion& lambda) {
  return verify_right_eigen(to_matrix(a), v, lambda);
}
inline double verify_right_eigen(const Herm3& a, const OctVec3& v, const Octonion& lambda) {
  return verify_right_eigen(to_matrix(a), v, lambda);
}

/// max |Av - lambda v|
template <std::size_t N>
double verify_left_eigen(const OctMatrix<N>& a, const OctVec<N>& v, const Octonion& lambda) {
  return max_abs(mat_vec(a, v) - left_mul(lambda, v));
}
inline double verify_left_eigen(const Herm2& a, const OctVec2& v, const Octonion& lambda) {
  return verify_left_eigen(to_matrix(a), v, lambda);
}
inline double verify_left_eigen(const Herm3& a, const OctVec3& v, const Octonion& lambda) {
  return verify_left_eigen(to_matrix(a), v, lambda);
}

/// max |(vv^dagger) v - v (v^dagger v)|
template <std::size_t N>
double three_psi_check(const OctVec<N>& v) {
  return max_abs(mat_vec(outer(v), v) - right_mul(v, inner(v, v)));
}

// Per-family diagnostics shared by the CLI and the tests.
struct FamilyResiduals {
  double eigen = 0.0;           // max |Av_i - v_i l_i|
  double orthogonality = 0.0;   // max_{i != j} |(v_i v_i^dagger) v_j|
  double normalization = 0.0;   // max |v_i^dagger v_i - 1|
  double completeness = 0.0;    // |sum v_i v_i^dagger - I|
  double reconstruction = 0.0;  // |sum l_i v_i v_i^dagger - A|
};

FamilyResiduals family_residuals(const Herm3& a, const Family& f);

struct Pair2Residuals {
  double eigen = 0.0;
  double orthogonality = 0.0;
  double completeness = 0.0;
  double reconstruction = 0.0;
};

Pair2Residuals pair_residuals(const Herm2& a, const std::array<EigenPair2, 2>& pairs);

}  // namespace octeig
