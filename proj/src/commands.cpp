#include "octeig/commands.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <vector>

#include "octeig/eigensolve.hpp"
#include "octeig/embed_oracle.hpp"

namespace octeig {

using nlohmann::ordered_json;

namespace {

ordered_json vec_json(const OctVec3& v) {
  return ordered_json::array({octonion_json(v[0]), octonion_json(v[1]), octonion_json(v[2])});
}
ordered_json vec_json(const OctVec2& v) {
  return ordered_json::array({octonion_json(v[0]), octonion_json(v[1])});
}

ordered_json clusters_json(const std::vector<Cluster>& cs) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : cs) arr.push_back({{"value", round12(c.value)}, {"count", c.count}});
  return arr;
}

// A named residual compared against its threshold.
struct Check {
  std::string name;
  double residual;
  double threshold;
  bool pass() const { return std::isfinite(residual) && residual <= threshold; }
};

ordered_json checks_json(const std::vector<Check>& checks) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks)
    arr.push_back({{"check", c.name},
                   {"residual", round12(c.residual)},
                   {"threshold", round12(c.threshold)},
                   {"pass", c.pass()}});
  return arr;
}

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
}

std::string checks_table(const std::vector<Check>& checks) {
  std::ostringstream os;
  os << std::left << std::setw(34) << "check" << std::setw(20) << "residual" << std::setw(20)
     << "threshold" << "verdict\n";
  os << std::setprecision(12);
  for (const auto& c : checks)
    os << std::left << std::setw(34) << c.name << std::setw(20) << c.residual << std::setw(20)
       << c.threshold << (c.pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string branch_name(const Spectrum3& s, std::size_t k) {
  if (s.doubled) return "doubled";
  return k == 0 ? "r+" : "r-";
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::vector<Check> family_checks(const std::string& tag, const FamilyResiduals& r, double eig_thr,
                                 double dec_thr) {
  return {{tag + " eigen residual", r.eigen, eig_thr},
          {tag + " orthogonality", r.orthogonality, dec_thr},
          {tag + " normalization", r.normalization, dec_thr},
          {tag + " completeness", r.completeness, dec_thr},
          {tag + " reconstruction", r.reconstruction, dec_thr}};
}

std::vector<Check> pair_checks(const Pair2Residuals& r, double eig_thr, double dec_thr) {
  return {{"eigen residual", r.eigen, eig_thr},
          {"orthogonality", r.orthogonality, dec_thr},
          {"completeness", r.completeness, dec_thr},
          {"reconstruction", r.reconstruction, dec_thr}};
}

// ---- eigen ------------------------------------------------------------------

CommandResult eigen3(const Herm3& a, const EigenOptions& opts) {
  const double norm = max_abs(a);
  const double eig_thr = opts.tol ? *opts.tol * (1.0 + norm) : eigen_tolerance(norm);
  const double dec_thr = opts.tol ? *opts.tol * (1.0 + norm) : reconstruction_tolerance(norm);

  const auto [rp, rm] = r_roots(a);
  const Spectrum3 spec = solve3(a);

  ordered_json j;
  j["command"] = "eigen";
  j["input"] = matrix_json(a);
  j["r"] = {round12(rp), round12(rm)};
  j["doubled"] = spec.doubled;
  j["families"] = ordered_json::array();
  std::vector<Check> checks;
  for (std::size_t k = 0; k < spec.families.size(); ++k) {
    if (!spec.doubled && ((opts.family == FamilySelect::kPlus && k != 0) ||
                          (opts.family == FamilySelect::kMinus && k != 1)))
      continue;
    const Family& f = spec.families[k];
    const FamilyResiduals res = family_residuals(a, f);
    ordered_json fj;
    fj["branch"] = branch_name(spec, k);
    fj["r"] = round12(f.r);
    fj["eigenvalues"] = {round12(f.lambdas[0]), round12(f.lambdas[1]), round12(f.lambdas[2])};
    fj["eigenvectors"] = ordered_json::array();
    for (const auto& v : f.eigvecs) fj["eigenvectors"].push_back(vec_json(v));
    fj["residuals"] = {{"eigen", round12(res.eigen)},
                       {"orthogonality", round12(res.orthogonality)},
                       {"normalization", round12(res.normalization)},
                       {"completeness", round12(res.completeness)},
                       {"reconstruction", round12(res.reconstruction)}};
    j["families"].push_back(fj);
    const auto fc = family_checks(branch_name(spec, k), res, eig_thr, dec_thr);
    checks.insert(checks.end(), fc.begin(), fc.end());
  }
  j["oracle"] = clusters_json(spectrum_with_multiplicity(a));
  j["verdicts"] = checks_json(checks);
  const bool pass = all_pass(checks);
  j["pass"] = pass;

  CommandResult out;
  out.exit_code = pass ? kExitPass : kExitVerificationFailure;
  if (!opts.pretty) {
    out.output = dump(j);
    return out;
  }
  std::ostringstream os;
  os << std::setprecision(12);
  os << "r roots: " << rp << ", " << rm << (spec.doubled ? "  (doubled family)" : "") << "\n";
  for (const auto& fj : j["families"]) {
    os << "family " << fj["branch"].get<std::string>() << "  r = " << fj["r"].get<double>() << "\n";
    for (std::size_t i = 0; i < 3; ++i) {
      os << "  lambda = " << std::setw(20) << fj["eigenvalues"][i].get<double>() << "  v = (";
      for (std::size_t c = 0; c < 3; ++c) os << (c ? "; " : "") << fj["eigenvectors"][i][c].dump();
      os << ")\n";
    }
  }
  os << "oracle clusters:";
  for (const auto& c : j["oracle"]) os << "  " << c["value"].get<double>() << " x" << c["count"].get<int>();
  os << "\n" << checks_table(checks);
  out.output = os.str();
  return out;
}

CommandResult eigen2(const Herm2& a, const EigenOptions& opts) {
  const double norm = max_abs(a);
  const double eig_thr = opts.tol ? *opts.tol * (1.0 + norm) : eigen_tolerance(norm);
  const double dec_thr = opts.tol ? *opts.tol * (1.0 + norm) : reconstruction_tolerance(norm);
  const auto pairs = decompose2(a);
  const Pair2Residuals res = pair_residuals(a, pairs);
  const auto checks = pair_checks(res, eig_thr, dec_thr);

  ordered_json j;
  j["command"] = "eigen";
  j["input"] = matrix_json(a);
  j["eigenpairs"] = ordered_json::array();
  for (const auto& p : pairs)
    j["eigenpairs"].push_back({{"eigenvalue", round12(p.lambda)}, {"eigenvector", vec_json(p.v)}});
  j["residuals"] = {{"eigen", round12(res.eigen)},
                    {"orthogonality", round12(res.orthogonality)},
                    {"completeness", round12(res.completeness)},
                    {"reconstruction", round12(res.reconstruction)}};
  j["oracle"] = clusters_json(spectrum_with_multiplicity(a));
  j["verdicts"] = checks_json(checks);
  const bool pass = all_pass(checks);
  j["pass"] = pass;

  CommandResult out;
  out.exit_code = pass ? kExitPass : kExitVerificationFailure;
  if (!opts.pretty) {
    out.output = dump(j);
    return out;
  }
  std::ostringstream os;
  os << std::setprecision(12);
  for (const auto& p : pairs)
    os << "lambda = " << std::setw(20) << p.lambda << "  v = (" << octonion_json(p.v[0]).dump()
       << "; " << octonion_json(p.v[1]).dump() << ")\n";
  os << checks_table(checks);
  out.output = os.str();
  return out;
}

// ---- verify -----------------------------------------------------------------

CommandResult verify3(const Herm3& a, const VerifyOptions& opts) {
  const double norm = max_abs(a);
  const double cube = 1.0 + norm * norm * norm;
  std::vector<Check> checks;
  checks.push_back({"characteristic equation", char_residual(a), 1e-9 * cube});
  checks.push_back({"determinant (Freudenthal)", std::abs(det3(a) - det3_freudenthal(a)), 1e-10 * cube});
  const double det_conj = det3(conj_matrix(a)) - (det3(a) - 4.0 * phi(a.a, a.b, a.c));
  checks.push_back({"det(conj A) = det A - 4 phi", std::abs(det_conj), 1e-10 * cube});
  const auto [rp, rm] = r_roots(a);
  const double vieta_sum = std::abs(rp + rm + 4.0 * phi(a.a, a.b, a.c));
  const double vieta_prod = std::abs(rp * rm + norm_sq(associator(a.a, a.b, a.c)));
  checks.push_back({"r-roots sum", vieta_sum, 1e-10 * cube});
  checks.push_back({"r-roots product", vieta_prod, 1e-10 * cube * cube});

  Spectrum3 spec = solve3(a);
  if (opts.corrupt) {
    Family& f = spec.families.front();
    f.eigvecs[1] = normalized(f.eigvecs[1] + f.eigvecs[0] * 0.5);
  }
  for (std::size_t k = 0; k < spec.families.size(); ++k) {
    const auto fc = family_checks(branch_name(spec, k), family_residuals(a, spec.families[k]),
                                  eigen_tolerance(norm), reconstruction_tolerance(norm));
    checks.insert(checks.end(), fc.begin(), fc.end());
  }

  ordered_json j;
  j["command"] = "verify";
  j["input"] = matrix_json(a);
  j["verdicts"] = checks_json(checks);
  const bool pass = all_pass(checks);
  j["pass"] = pass;
  CommandResult out;
  out.exit_code = pass ? kExitPass : kExitVerificationFailure;
  out.output = opts.pretty ? checks_table(checks) : dump(j);
  return out;
}

CommandResult verify2(const Herm2& a, const VerifyOptions& opts) {
  const double norm = max_abs(a);
  std::vector<Check> checks;
  checks.push_back({"characteristic equation", char_residual(a), 1e-10 * (1.0 + norm * norm)});
  auto pairs = decompose2(a);
  if (opts.corrupt) pairs[1].v = normalized(pairs[1].v + pairs[0].v * 0.5);
  const auto pc = pair_checks(pair_residuals(a, pairs), eigen_tolerance(norm), reconstruction_tolerance(norm));
  checks.insert(checks.end(), pc.begin(), pc.end());
  for (const auto& p : pairs) {
    const OctMatrix<2> o = outer(p.v);
    checks.push_back({"idempotence", max_abs(matmul(o, o) - norm_sq(p.v) * o), 1e-10 * (1.0 + norm)});
  }

  ordered_json j;
  j["command"] = "verify";
  j["input"] = matrix_json(a);
  j["verdicts"] = checks_json(checks);
  const bool pass = all_pass(checks);
  j["pass"] = pass;
  CommandResult out;
  out.exit_code = pass ? kExitPass : kExitVerificationFailure;
  out.output = opts.pretty ? checks_table(checks) : dump(j);
  return out;
}

// ---- oracle -----------------------------------------------------------------

template <typename H>
CommandResult oracle_common(const H& a, std::vector<double> analytic, bool pretty) {
  const double gap = 1e-7 * (1.0 + max_abs(a));
  const RealSpectrum real = jacobi_eigen(embed(a));
  std::sort(analytic.begin(), analytic.end());
  double max_diff = 0.0;
  for (std::size_t k = 0; k < analytic.size(); ++k)
    max_diff = std::max(max_diff, std::abs(analytic[k] - real.eigenvalues[k]));
  const auto analytic_clusters = cluster_eigenvalues(analytic, gap);
  const auto oracle_clusters = cluster_eigenvalues(real.eigenvalues, gap);
  bool same_shape = analytic_clusters.size() == oracle_clusters.size();
  for (std::size_t k = 0; same_shape && k < analytic_clusters.size(); ++k)
    same_shape = analytic_clusters[k].count == oracle_clusters[k].count;
  const double thr = 1e-8 * (1.0 + max_abs(a));
  const bool pass = real.converged && same_shape && max_diff <= thr;

  ordered_json j;
  j["command"] = "oracle";
  j["input"] = matrix_json(a);
  j["analytic"] = clusters_json(analytic_clusters);
  j["oracle"] = clusters_json(oracle_clusters);
  j["jacobi_sweeps"] = real.sweeps;
  j["jacobi_converged"] = real.converged;
  j["max_abs_difference"] = round12(max_diff);
  j["threshold"] = round12(thr);
  j["multiplicities_match"] = same_shape;
  j["pass"] = pass;

  CommandResult out;
  out.exit_code = pass ? kExitPass : kExitVerificationFailure;
  if (!pretty) {
    out.output = dump(j);
    return out;
  }
  std::ostringstream os;
  os << std::setprecision(12) << std::left << std::setw(24) << "analytic" << "oracle\n";
  const std::size_t rows = std::max(analytic_clusters.size(), oracle_clusters.size());
  for (std::size_t k = 0; k < rows; ++k) {
    std::ostringstream l, r;
    l << std::setprecision(12);
    r << std::setprecision(12);
    if (k < analytic_clusters.size()) l << analytic_clusters[k].value << " x" << analytic_clusters[k].count;
    if (k < oracle_clusters.size()) r << oracle_clusters[k].value << " x" << oracle_clusters[k].count;
    os << std::setw(24) << l.str() << r.str() << "\n";
  }
  os << "max |difference| = " << max_diff << (pass ? "  PASS" : "  FAIL") << "\n";
  out.output = os.str();
  return out;
}

template <typename Fn>
CommandResult guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    return {kExitParseError, "", e.what()};
  } catch (const SolverDefect& e) {
    return {kExitSolverDefect, "", e.what()};
  }
}

}  // namespace

FamilySelect parse_family_select(const std::string& s) {
  if (s == "r+") return FamilySelect::kPlus;
  if (s == "r-") return FamilySelect::kMinus;
  throw ParseError("--family must be r+ or r-");
}

CommandResult run_eigen(const MatrixInput& m, const EigenOptions& opts) {
  return guarded([&] {
    return std::visit(
        [&](const auto& h) {
          if constexpr (std::is_same_v<std::decay_t<decltype(h)>, Herm2>) return eigen2(h, opts);
          else return eigen3(h, opts);
        },
        m);
  });
}

CommandResult run_verify(const MatrixInput& m, const VerifyOptions& opts) {
  return guarded([&] {
    return std::visit(
        [&](const auto& h) {
          if constexpr (std::is_same_v<std::decay_t<decltype(h)>, Herm2>) return verify2(h, opts);
          else return verify3(h, opts);
        },
        m);
  });
}

CommandResult run_oracle(const MatrixInput& m, bool pretty) {
  return guarded([&] {
    if (const auto* h2 = std::get_if<Herm2>(&m)) {
      const auto l = eigenvalues2(*h2);
      std::vector<double> analytic;
      for (double x : l) analytic.insert(analytic.end(), 8, x);
      return oracle_common(*h2, analytic, pretty);
    }
    const auto& h3 = std::get<Herm3>(m);
    const Spectrum3 s = solve3(h3);
    std::vector<double> analytic;
    const int reps = s.doubled ? 8 : 4;
    for (const auto& f : s.families)
      for (double x : f.lambdas) analytic.insert(analytic.end(), reps, x);
    return oracle_common(h3, analytic, pretty);
  });
}

CommandResult cmd_eigen(const std::string& path, const EigenOptions& opts) {
  return guarded([&] { return run_eigen(read_matrix_file(path), opts); });
}

CommandResult cmd_verify(const std::string& path, const VerifyOptions& opts) {
  return guarded([&] { return run_verify(read_matrix_file(path), opts); });
}

CommandResult cmd_oracle(const std::string& path, bool pretty) {
  return guarded([&] { return run_oracle(read_matrix_file(path), pretty); });
}

CommandResult cmd_random(std::uint64_t seed, MatrixClass cls, double scale, int dim) {
  if (dim == 2) return {kExitPass, serialize_matrix(random_herm2(seed, cls, scale)), ""};
  return {kExitPass, serialize_matrix(random_herm3(seed, cls, scale)), ""};
}

}  // namespace octeig
