#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "octeig/matrix_file.hpp"

namespace octeig {

enum ExitCode : int {
  kExitPass = 0,
  kExitParseError = 2,
  kExitSolverDefect = 3,
  kExitVerificationFailure = 4,
};

struct CommandResult {
  int exit_code = kExitPass;
  std::string output;  // standard output
  std::string error;   // diagnostic for standard error
};

enum class FamilySelect { kAll, kPlus, kMinus };

struct EigenOptions {
  FamilySelect family = FamilySelect::kAll;
  // Residual threshold factor; every residual is compared with tol (1 + ||A||).
  // Unset means 1e-9 for eigen residuals and 1e-8 for the decomposition.
  std::optional<double> tol;
  bool pretty = false;
};

struct VerifyOptions {
  // Negative control: mixes a fraction of one eigenvector into another before
  // the checks run, which must make the orthogonality check fail.
  bool corrupt = false;
  bool pretty = false;
};

/// Throws ParseError for anything other than r+ / r-.
FamilySelect parse_family_select(const std::string& s);

// In-memory variants; the path variants read the file first and map
// ParseError to exit code 2.
CommandResult run_eigen(const MatrixInput& m, const EigenOptions& opts);
CommandResult run_verify(const MatrixInput& m, const VerifyOptions& opts);
CommandResult run_oracle(const MatrixInput& m, bool pretty = false);

CommandResult cmd_eigen(const std::string& path, const EigenOptions& opts);
CommandResult cmd_verify(const std::string& path, const VerifyOptions& opts);
CommandResult cmd_oracle(const std::string& path, bool pretty = false);
CommandResult cmd_random(std::uint64_t seed, MatrixClass cls, double scale, int dim = 3);

}  // namespace octeig
