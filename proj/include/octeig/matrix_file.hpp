#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "octeig/hermitian.hpp"

namespace octeig {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

using MatrixInput = std::variant<Herm2, Herm3>;

// Matrix file schema (UTF-8 JSON):
//   {"dim": 2, "diag": [p, m],    "a": [8 reals]}
//   {"dim": 3, "diag": [p, m, n], "a": [...], "b": [...], "c": [...]}
// Octonions are 8-element arrays in basis order (1, i, j, k, l, il, jl, kl);
// the 3x3 layout is [[p, a, conj(b)], [conj(a), m, c], [b, conj(c), n]].
MatrixInput parse_matrix(std::string_view text);
MatrixInput read_matrix_file(const std::string& path);

/// Rounds to 12 significant digits, the precision used for all emitted numbers.
double round12(double x);

nlohmann::ordered_json octonion_json(const Octonion& o);
nlohmann::ordered_json matrix_json(const MatrixInput& m);
std::string serialize_matrix(const MatrixInput& m);

enum class MatrixClass { kComplex, kQuaternionic, kOctonionic };

/// Throws ParseError for names other than complex|quaternionic|octonionic.
MatrixClass parse_matrix_class(std::string_view name);

// Seeded generation. The stream is std::mt19937_64 seeded with `seed`; each
// draw maps the top 53 bits to u in [0, 1) and returns scale * (2u - 1).
// Draw order: diagonal, then a, b, c, each over its populated slots only
// (complex: 1, i; quaternionic: 1, i, j, k; octonionic: all 8). Octonionic
// draws are repeated until |[a, b, c]| > 1e-3 scale^3. All values are
// rounded to 12 significant digits.
Herm3 random_herm3(std::uint64_t seed, MatrixClass cls, double scale = 1.0);
Herm2 random_herm2(std::uint64_t seed, MatrixClass cls, double scale = 1.0);

}  // namespace octeig
