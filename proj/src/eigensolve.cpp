#include "octeig/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "octeig/cubic.hpp"
#include "octeig/embed_oracle.hpp"

namespace octeig {
namespace {

// Magnitude used for the structural (relative) decisions.
double scale_of(const Herm3& a) {
  const double n = max_abs(a);
  return n > 0.0 ? n : 1.0;
}

// Natural size of r and of the associator: |a| |b| |c|.
double triple_scale(const Herm3& a) { return norm(a.a) * norm(a.b) * norm(a.c); }

// Both r-roots closer than this are treated as a single doubled family.
bool roots_coincide(const Herm3& a, double rp, double rm) {
  return rp - rm <= 1e-7 * triple_scale(a);
}

// Real inner product on the 8n real coordinates, Re(v^dagger w).
template <std::size_t N>
double rdot(const OctVec<N>& v, const OctVec<N>& w) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < 8; ++k) s += v[i][k] * w[i][k];
  return s;
}

double odot(const Octonion& x, const Octonion& y) {
  double s = 0.0;
  for (std::size_t k = 0; k < 8; ++k) s += x[k] * y[k];
  return s;
}

// Orthonormalizes `v` against `basis` in the real sense; false if v collapses.
bool orthonormalize_against(const std::vector<OctVec3>& basis, OctVec3& v) {
  const double before = std::sqrt(norm_sq(v));
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& q : basis) v = v - q * rdot(q, v);
  const double after = std::sqrt(norm_sq(v));
  if (after <= 1e-6 * before) return false;
  v = v * (1.0 / after);
  return true;
}

double cubic_residual(const Herm3& a, double lambda, double r) {
  const double tr = trace(a), sg = sigma(a), dt = det3(a);
  const double value = ((lambda - tr) * lambda + sg) * lambda - dt - r;
  const double l = std::abs(lambda);
  const double mag = 1.0 + l * l * l + std::abs(tr) * l * l + std::abs(sg) * l + std::abs(dt) + std::abs(r);
  return std::abs(value) / mag;
}

// Unit quaternionic frame {1, u1, u2, u1 u2} whose span contains a, b and c
// whenever they associate.
std::array<Octonion, 4> quaternionic_frame(const Herm3& h) {
  const double tol = 1e-9 * scale_of(h);
  const std::array<Octonion, 3> dirs{h.a.imag(), h.b.imag(), h.c.imag()};

  Octonion u1 = basis::i;
  for (const auto& d : dirs) {
    if (norm(d) > tol) {
      u1 = d / norm(d);
      break;
    }
  }
  auto reject = [&](const Octonion& d) { return d - u1 * odot(u1, d); };
  Octonion u2;
  bool found = false;
  for (const auto& d : dirs) {
    const Octonion w = reject(d);
    if (norm(w) > tol) {
      u2 = w / norm(w);
      found = true;
      break;
    }
  }
  if (!found) {
    double best = -1.0;
    for (std::size_t k = 1; k < 8; ++k) {
      const Octonion w = reject(Octonion::unit(k));
      if (norm(w) > best) {
        best = norm(w);
        u2 = w / norm(w);
      }
    }
  }
  return {basis::one, u1, u2, u1 * u2};
}

// Both r-roots coincide: A is quaternionic within a subalgebra H0 and the
// classical quaternionic spectral theorem applies on H0^3.
Family decompose_diagonal(const Herm3& h, double r) {
  std::array<std::pair<double, std::size_t>, 3> d{{{h.p, 0}, {h.m, 1}, {h.n, 2}}};
  std::sort(d.begin(), d.end());
  Family f;
  f.r = r;
  for (std::size_t k = 0; k < 3; ++k) {
    f.lambdas[k] = d[k].first;
    f.eigvecs[k] = OctVec3{};
    f.eigvecs[k][d[k].second] = basis::one;
  }
  return f;
}

Family decompose_doubled(const Herm3& h, double r) {
  if (h.a == Octonion{} && h.b == Octonion{} && h.c == Octonion{}) return decompose_diagonal(h, r);
  const double scale = scale_of(h);
  const auto frame = quaternionic_frame(h);

  std::array<OctVec3, 12> basis_vecs{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t q = 0; q < 4; ++q) basis_vecs[4 * i + q][i] = frame[q];

  const OctMatrix<3> am = to_matrix(h);
  RealSymMatrix m(12);
  for (std::size_t col = 0; col < 12; ++col) {
    const OctVec3 image = mat_vec(am, basis_vecs[col]);
    for (std::size_t row = 0; row < 12; ++row) m(row, col) = rdot(basis_vecs[row], image);
  }
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = i + 1; j < 12; ++j) m(i, j) = m(j, i) = 0.5 * (m(i, j) + m(j, i));
  const RealSpectrum spec = jacobi_eigen(m);

  Family f;
  f.r = r;
  f.lambdas = family_eigenvalues(h, r);
  std::vector<OctVec3> chosen_span;  // right-H0 multiples of chosen vectors
  const double cluster = 1e-7 * scale;
  for (std::size_t k = 0; k < 3; ++k) {
    bool picked = false;
    for (std::size_t e = 0; e < 12 && !picked; ++e) {
      if (std::abs(spec.eigenvalues[e] - f.lambdas[k]) > cluster) continue;
      OctVec3 v{};
      for (std::size_t b = 0; b < 12; ++b) v = v + basis_vecs[b] * spec.eigenvectors[e][b];
      if (!orthonormalize_against(chosen_span, v)) continue;
      f.eigvecs[k] = v;
      for (const auto& q : frame) chosen_span.push_back(right_mul(v, q));
      picked = true;
    }
    if (!picked) throw SolverDefect("no quaternionic eigenvector for doubled family");
  }
  return f;
}

Family split_repeated(const Herm3& h, Family f) {
  const double scale = scale_of(h);
  const double gap = 1e-6 * scale;
  const bool low_pair = f.lambdas[1] - f.lambdas[0] <= gap;
  const double mu = low_pair ? f.lambdas[0] : f.lambdas[2];
  const double nu = low_pair ? f.lambdas[2] : f.lambdas[0];
  // The repeated value is re-read from the pair so both slots agree.
  const double mu_exact = low_pair ? 0.5 * (f.lambdas[0] + f.lambdas[1])
                                   : 0.5 * (f.lambdas[1] + f.lambdas[2]);

  const std::vector<OctVec3> kernel = eigenspace_basis3(h, mu_exact, f.r);
  if (kernel.empty()) throw SolverDefect("empty eigenspace for repeated eigenvalue");
  const OctVec3 v = kernel.front();

  double alpha = 1.0 + max_abs(h);
  for (int attempt = 0; attempt <= 5; ++attempt, alpha *= 2.0) {
    const Herm3 x = repeated_eigen_split(h, v, alpha);
    const auto [rxp, rxm] = r_roots(x);
    const double shifted = mu_exact - alpha;
    const double rx = cubic_residual(x, shifted, rxp) <= cubic_residual(x, shifted, rxm) ? rxp : rxm;
    std::array<double, 3> lx;
    try {
      lx = family_eigenvalues(x, rx);
    } catch (const SolverDefect&) {
      continue;
    }
    if (lx[1] - lx[0] <= gap || lx[2] - lx[1] <= gap) continue;

    std::size_t skip = 0;
    for (std::size_t k = 1; k < 3; ++k)
      if (std::abs(lx[k] - shifted) < std::abs(lx[skip] - shifted)) skip = k;

    std::vector<std::pair<double, OctVec3>> found;
    bool ok = true;
    for (std::size_t k = 0; k < 3 && ok; ++k) {
      if (k == skip) continue;
      std::vector<OctVec3> basis;
      try {
        basis = eigenspace_basis3(x, lx[k], rx);
      } catch (const SolverDefect&) {
        ok = false;
        break;
      }
      if (basis.empty()) {
        ok = false;
        break;
      }
      const OctVec3& u = basis.front();
      const double target = std::abs(lx[k] - mu) < std::abs(lx[k] - nu) ? mu_exact : nu;
      if (verify_right_eigen(h, u, Octonion(target)) > eigen_tolerance(max_abs(h)) ||
          !is_orthogonal(v, u, reconstruction_tolerance(max_abs(h))).orthogonal) {
        ok = false;
        break;
      }
      found.emplace_back(target, u);
    }
    if (!ok || found.size() != 2) continue;
    // Exactly one of the two must belong to the simple eigenvalue nu.
    if ((found[0].first == nu) == (found[1].first == nu)) continue;
    const OctVec3& u_mu = found[0].first == nu ? found[1].second : found[0].second;
    const OctVec3& u_nu = found[0].first == nu ? found[0].second : found[1].second;

    if (low_pair) {
      f.lambdas = {mu_exact, mu_exact, nu};
      f.eigvecs = {v, u_mu, u_nu};
    } else {
      f.lambdas = {nu, mu_exact, mu_exact};
      f.eigvecs = {u_nu, v, u_mu};
    }
    return f;
  }
  throw SolverDefect("repeated eigenvalue split did not separate the spectrum");
}

}  // namespace

// ---- 2x2 -------------------------------------------------------------------

std::array<double, 2> eigenvalues2(const Herm2& a) {
  const double half_tr = 0.5 * trace(a);
  const double half_diff = 0.5 * (a.p - a.m);
  const double rad = std::sqrt(half_diff * half_diff + norm_sq(a.a));
  return {half_tr - rad, half_tr + rad};
}

OctVec2 eigenvector2(const Herm2& a, double lambda, const Octonion& xi) {
  const double n2 = norm_sq(a.a);
  if (n2 == 0.0) throw std::invalid_argument("eigenvector2: off-diagonal entry is zero");
  const OctVec2 base{Octonion(n2), conj(a.a) * (lambda - a.p)};
  return right_mul(base, xi);
}

std::array<EigenPair2, 2> decompose2(const Herm2& a) {
  if (norm_sq(a.a) == 0.0) {
    EigenPair2 e1{a.p, {basis::one, Octonion{}}};
    EigenPair2 e2{a.m, {Octonion{}, basis::one}};
    if (a.m < a.p) std::swap(e1, e2);
    return {e1, e2};
  }
  const auto lam = eigenvalues2(a);
  return {EigenPair2{lam[0], normalized(eigenvector2(a, lam[0], basis::one))},
          EigenPair2{lam[1], normalized(eigenvector2(a, lam[1], basis::one))}};
}

OctVec2 gram_schmidt2(const OctVec2& v, const OctVec2& w) {
  const double n2 = norm_sq(v);
  if (n2 == 0.0) throw std::invalid_argument("gram_schmidt2: zero vector");
  return w - mat_vec(outer(v), w) * (1.0 / n2);
}

// ---- 3x3 -------------------------------------------------------------------

std::pair<double, double> r_roots(const Herm3& a) {
  const double lin = 4.0 * phi(a.a, a.b, a.c);
  const double con = norm_sq(associator(a.a, a.b, a.c));
  const double disc = std::sqrt(lin * lin + 4.0 * con);
  if (disc == 0.0) return {0.0, 0.0};
  // r^2 + lin r - con = 0; the product of the roots is -con.
  const double q = -0.5 * (lin + std::copysign(disc, lin));
  const double other = con == 0.0 ? 0.0 : -con / q;
  return {std::max(q, other), std::min(q, other)};
}

std::array<double, 3> family_eigenvalues(const Herm3& a, double r) {
  const auto roots = real_cubic_roots(-trace(a), sigma(a), -det3(a) - r);
  for (double l : roots)
    if (!std::isfinite(l) || cubic_residual(a, l, r) > 1e-10)
      throw SolverDefect("modified characteristic equation has no real root triple for this r");
  return roots;
}

Octonion rreal_rhs(const Octonion& a, const Octonion& b, const Octonion& c,
                   const Octonion& z) {
  const Octonion ab = conj(a), bb = conj(b), cb = conj(c);
  return b * (a * (c * z)) + cb * (ab * (bb * z)) - (b * (a * c) + (cb * ab) * bb) * z;
}

Octonion charlam_residual(const Herm3& a, double lambda, const Octonion& z) {
  const double charpoly =
      ((lambda - trace(a)) * lambda + sigma(a)) * lambda - det3(a);
  return charpoly * z - rreal_rhs(a.a, a.b, a.c, z);
}

double r_of(const Herm3& a, const OctVec3& v) {
  std::size_t slot = 2;
  for (std::size_t k = 0; k < 2; ++k)
    if (norm_sq(v[k]) > norm_sq(v[slot])) slot = k;
  const Octonion& w = v[slot];
  if (norm_sq(w) == 0.0) throw std::invalid_argument("r_of: zero vector");
  // Cyclic relabelling (x, y, z) -> (y, z, x) maps (a, b, c) to (c, a, b).
  Octonion t;
  switch (slot) {
    case 0: t = rreal_rhs(a.c, a.a, a.b, w); break;
    case 1: t = rreal_rhs(a.b, a.c, a.a, w); break;
    default: t = rreal_rhs(a.a, a.b, a.c, w); break;
  }
  return odot(w, t) / norm_sq(w);
}

std::vector<OctVec3> eigenspace_basis3(const Herm3& a, double lambda, double r) {
  const double scale = scale_of(a);
  const double tol = eigen_tolerance(max_abs(a));
  const double cube = triple_scale(a);

  // Relabelling (x, y, z) -> (y, z, x) gives an equivalent matrix with
  // (p, m, n) -> (m, n, p) and (a, b, c) -> (c, a, b); the closed form is
  // tried in whichever orientation has the best-conditioned denominators.
  std::array<Herm3, 3> rot{a, Herm3{a.m, a.n, a.p, a.c, a.a, a.b}, Herm3{}};
  rot[2] = Herm3{rot[1].m, rot[1].n, rot[1].p, rot[1].c, rot[1].a, rot[1].b};
  auto conditioning = [&](const Herm3& h) {
    const double d1 = lambda - h.p;
    const double d2 = d1 * (lambda - h.m) - norm_sq(h.a);
    return std::min(std::abs(d1) / scale, std::abs(d2) / (scale * scale));
  };
  std::array<std::size_t, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return conditioning(rot[i]) > conditioning(rot[j]);
  });

  std::vector<OctVec3> out;
  for (std::size_t k : order) {
    const Herm3& h = rot[k];
    const Octonion assoc = associator(h.a, h.b, h.c);
    const double s2 = norm_sq(assoc);
    const double d1 = lambda - h.p;
    const double d2 = d1 * (lambda - h.m) - norm_sq(h.a);
    if (!(std::sqrt(s2) > 1e-10 * cube && s2 > 0.0 && conditioning(h) > 1e-8)) break;
    const Octonion factor = Octonion(1.0) + assoc * (r / s2);
    const Octonion ab = conj(h.a), bb = conj(h.b);
    out.clear();
    bool ok = true;
    for (const Octonion& seed : {h.a, h.b, h.c, basis::one}) {
      const Octonion z = seed * factor;
      const Octonion y = (ab * (bb * z) + d1 * (h.c * z)) / d2;
      const Octonion x = (h.a * y + bb * z) / d1;
      OctVec3 v;
      switch (k) {
        case 0: v = {x, y, z}; break;
        case 1: v = {z, x, y}; break;
        default: v = {y, z, x}; break;
      }
      v = normalized(v);
      if (verify_right_eigen(a, v, Octonion(lambda)) > tol || !orthonormalize_against(out, v)) {
        ok = false;
        break;
      }
      out.push_back(v);
    }
    if (ok) return out;
  }

  out.clear();
  // A kernel vector belongs to the family whose r-root its r value is nearest;
  // the two families can have eigenvalues much closer than the cluster gap.
  const auto [rp, rm] = r_roots(a);
  const double r_tol = std::max(1e-7 * cube, 0.5 * (rp - rm));
  for (const auto& v : kernel_basis(a, lambda))
    if (std::abs(r_of(a, v) - r) <= r_tol && verify_right_eigen(a, v, Octonion(lambda)) <= tol)
      out.push_back(v);
  if (out.empty()) throw SolverDefect("no eigenvector at this eigenvalue in the requested family");
  return out;
}

Herm3 repeated_eigen_split(const Herm3& a, const OctVec3& v, double alpha) {
  const OctMatrix<3> x = to_matrix(a) - alpha * outer(v);
  return to_herm3(x, 1e-12 * (1.0 + max_abs(x)));
}

Family decompose3(const Herm3& a, double r) {
  const double scale = scale_of(a);
  const auto [rp, rm] = r_roots(a);
  Family f;
  if (roots_coincide(a, rp, rm)) {
    f = decompose_doubled(a, r);
  } else {
    f.r = r;
    f.lambdas = family_eigenvalues(a, r);
    const double gap = 1e-6 * scale;
    const bool d01 = f.lambdas[1] - f.lambdas[0] <= gap;
    const bool d12 = f.lambdas[2] - f.lambdas[1] <= gap;
    if (d01 && d12) {
      // Multiplicity three forces A = lambda I, which has coincident roots.
      throw SolverDefect("triple eigenvalue in a non-degenerate family");
    } else if (d01 || d12) {
      f = split_repeated(a, f);
    } else {
      for (std::size_t k = 0; k < 3; ++k)
        f.eigvecs[k] = eigenspace_basis3(a, f.lambdas[k], r).front();
    }
  }

  const FamilyResiduals res = family_residuals(a, f);
  const double norm = max_abs(a);
  if (res.eigen > eigen_tolerance(norm) || res.orthogonality > reconstruction_tolerance(norm) ||
      res.completeness > reconstruction_tolerance(norm) ||
      res.reconstruction > reconstruction_tolerance(norm))
    throw SolverDefect("family decomposition failed its residual checks");
  return f;
}

Spectrum3 solve3(const Herm3& a) {
  const auto [rp, rm] = r_roots(a);
  Spectrum3 s;
  if (roots_coincide(a, rp, rm)) {
    s.doubled = true;
    s.families.push_back(decompose3(a, 0.5 * (rp + rm)));
  } else {
    s.families.push_back(decompose3(a, rp));
    s.families.push_back(decompose3(a, rm));
  }
  return s;
}

FamilyResiduals family_residuals(const Herm3& a, const Family& f) {
  FamilyResiduals res;
  OctMatrix<3> sum_outer, sum_weighted;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& v = f.eigvecs[i];
    res.eigen = std::max(res.eigen, verify_right_eigen(a, v, Octonion(f.lambdas[i])));
    res.normalization = std::max(res.normalization, std::abs(norm_sq(v) - 1.0));
    const OctMatrix<3> o = outer(v);
    sum_outer += o;
    sum_weighted += f.lambdas[i] * o;
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j)
        res.orthogonality = std::max(res.orthogonality, is_orthogonal(v, f.eigvecs[j]).residual);
  }
  res.completeness = max_abs(sum_outer - OctMatrix<3>::identity());
  res.reconstruction = max_abs(sum_weighted - to_matrix(a));
  return res;
}

Pair2Residuals pair_residuals(const Herm2& a, const std::array<EigenPair2, 2>& pairs) {
  Pair2Residuals res;
  OctMatrix<2> sum_outer, sum_weighted;
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& v = pairs[i].v;
    res.eigen = std::max(res.eigen, verify_right_eigen(a, v, Octonion(pairs[i].lambda)));
    const OctMatrix<2> o = outer(v);
    sum_outer += (1.0 / norm_sq(v)) * o;
    sum_weighted += (pairs[i].lambda / norm_sq(v)) * o;
  }
  res.orthogonality = std::max(is_orthogonal(pairs[0].v, pairs[1].v).residual,
                               is_orthogonal(pairs[1].v, pairs[0].v).residual);
  res.completeness = max_abs(sum_outer - OctMatrix<2>::identity());
  res.reconstruction = max_abs(sum_weighted - to_matrix(a));
  return res;
}

}  // namespace octeig
