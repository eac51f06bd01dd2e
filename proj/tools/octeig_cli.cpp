// octeig: real right-eigenvalues of 2x2 and 3x3 octonionic Hermitian matrices.
//
//   octeig eigen  <file> [--family r+|r-] [--tol X] [--pretty]
//   octeig verify <file> [--corrupt] [--pretty]
//   octeig oracle <file> [--pretty]
//   octeig random --seed N --class complex|quaternionic|octonionic [--scale S] [--dim 2|3]
//
// Exit codes: 0 pass, 2 parse error, 3 solver defect, 4 verification failure.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "octeig/commands.hpp"

int main(int argc, char** argv) {
  using namespace octeig;

  CLI::App app{"Real right-eigenvalue solver for octonionic Hermitian matrices"};
  app.require_subcommand(1);

  std::string eigen_path, family, verify_path, oracle_path, cls_name;
  double tol = 0.0, scale = 1.0;
  bool eigen_pretty = false, verify_pretty = false, oracle_pretty = false, corrupt = false;
  std::uint64_t seed = 0;
  int dim = 3;

  auto* eigen = app.add_subcommand("eigen", "Solve and decompose a matrix file");
  eigen->add_option("file", eigen_path)->required();
  eigen->add_option("--family", family, "Only report one branch (r+ or r-)");
  auto* tol_opt = eigen->add_option("--tol", tol, "Residual threshold factor (times 1 + ||A||)");
  eigen->add_flag("--pretty", eigen_pretty, "Human-readable table instead of JSON");

  auto* verify = app.add_subcommand("verify", "Run the identity and decomposition checks");
  verify->add_option("file", verify_path)->required();
  verify->add_flag("--corrupt", corrupt, "Inject a corrupted eigenvector (negative control)");
  verify->add_flag("--pretty", verify_pretty);

  auto* oracle = app.add_subcommand("oracle", "Compare against the real-embedding spectrum");
  oracle->add_option("file", oracle_path)->required();
  oracle->add_flag("--pretty", oracle_pretty);

  auto* random = app.add_subcommand("random", "Emit a seeded random matrix file");
  random->add_option("--seed", seed)->required();
  random->add_option("--class", cls_name)->required();
  random->add_option("--scale", scale);
  random->add_option("--dim", dim)->check(CLI::IsMember({2, 3}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParseError;
  }

  CommandResult result;
  try {
    if (*eigen) {
      EigenOptions opts;
      if (!family.empty()) opts.family = parse_family_select(family);
      if (*tol_opt) opts.tol = tol;
      opts.pretty = eigen_pretty;
      result = cmd_eigen(eigen_path, opts);
    } else if (*verify) {
      result = cmd_verify(verify_path, {corrupt, verify_pretty});
    } else if (*oracle) {
      result = cmd_oracle(oracle_path, oracle_pretty);
    } else {
      result = cmd_random(seed, parse_matrix_class(cls_name), scale, dim);
    }
  } catch (const ParseError& e) {
    result = {kExitParseError, "", e.what()};
  }

  std::cout << result.output;
  if (!result.error.empty()) std::cerr << "octeig: " << result.error << "\n";
  return result.exit_code;
}
