#include "octeig/matrix_file.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

namespace octeig {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

double read_real(const json& v, const char* what) {
  if (!v.is_number()) throw ParseError(std::string(what) + ": expected a number");
  return v.get<double>();
}

Octonion read_octonion(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  const json& v = doc.at(key);
  if (!v.is_array() || v.size() != 8)
    throw ParseError(std::string("\"") + key + "\" must be an array of 8 reals");
  Octonion o;
  for (std::size_t k = 0; k < 8; ++k) o[k] = read_real(v[k], key);
  return o;
}

double read_diagonal(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_array() && v.size() == 8) {
    for (std::size_t k = 1; k < 8; ++k)
      if (read_real(v[k], "diag") != 0.0) throw ParseError("non-real diagonal entry");
    return read_real(v[0], "diag");
  }
  throw ParseError("diagonal entries must be real numbers");
}

}  // namespace

MatrixInput parse_matrix(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("matrix file must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw ParseError("missing integer \"dim\"");
  const int dim = doc["dim"].get<int>();
  if (dim != 2 && dim != 3) throw ParseError("\"dim\" must be 2 or 3");
  if (!doc.contains("diag") || !doc["diag"].is_array() ||
      doc["diag"].size() != static_cast<std::size_t>(dim))
    throw ParseError("\"diag\" must hold exactly dim entries");

  const json& d = doc["diag"];
  if (dim == 2) {
    if (doc.contains("b") || doc.contains("c"))
      throw ParseError("keys \"b\"/\"c\" are not valid for dim 2");
    return Herm2{read_diagonal(d[0]), read_diagonal(d[1]), read_octonion(doc, "a")};
  }
  return Herm3{read_diagonal(d[0]),     read_diagonal(d[1]),     read_diagonal(d[2]),
               read_octonion(doc, "a"), read_octonion(doc, "b"), read_octonion(doc, "c")};
}

MatrixInput read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

ordered_json octonion_json(const Octonion& o) {
  ordered_json arr = ordered_json::array();
  for (double x : o.coeffs()) arr.push_back(round12(x));
  return arr;
}

ordered_json matrix_json(const MatrixInput& m) {
  ordered_json j;
  if (const auto* h2 = std::get_if<Herm2>(&m)) {
    j["dim"] = 2;
    j["diag"] = {round12(h2->p), round12(h2->m)};
    j["a"] = octonion_json(h2->a);
  } else {
    const auto& h3 = std::get<Herm3>(m);
    j["dim"] = 3;
    j["diag"] = {round12(h3.p), round12(h3.m), round12(h3.n)};
    j["a"] = octonion_json(h3.a);
    j["b"] = octonion_json(h3.b);
    j["c"] = octonion_json(h3.c);
  }
  return j;
}

std::string serialize_matrix(const MatrixInput& m) { return matrix_json(m).dump(2) + "\n"; }

MatrixClass parse_matrix_class(std::string_view name) {
  if (name == "complex") return MatrixClass::kComplex;
  if (name == "quaternionic") return MatrixClass::kQuaternionic;
  if (name == "octonionic") return MatrixClass::kOctonionic;
  throw ParseError("unknown class \"" + std::string(name) + "\"");
}

namespace {

class Draw {
 public:
  Draw(std::uint64_t seed, double scale) : gen_(seed), scale_(scale) {}
  double operator()() {
    const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return round12(scale_ * (2.0 * u - 1.0));
  }
  Octonion octonion(MatrixClass cls) {
    const std::size_t slots = cls == MatrixClass::kComplex ? 2 : cls == MatrixClass::kQuaternionic ? 4 : 8;
    Octonion o;
    for (std::size_t k = 0; k < slots; ++k) o[k] = (*this)();
    return o;
  }

 private:
  std::mt19937_64 gen_;
  double scale_;
};

}  // namespace

Herm3 random_herm3(std::uint64_t seed, MatrixClass cls, double scale) {
  Draw draw(seed, scale);
  for (;;) {
    Herm3 h;
    h.p = draw();
    h.m = draw();
    h.n = draw();
    h.a = draw.octonion(cls);
    h.b = draw.octonion(cls);
    h.c = draw.octonion(cls);
    if (cls != MatrixClass::kOctonionic ||
        norm(associator(h.a, h.b, h.c)) > 1e-3 * scale * scale * scale)
      return h;
  }
}

Herm2 random_herm2(std::uint64_t seed, MatrixClass cls, double scale) {
  Draw draw(seed, scale);
  Herm2 h;
  h.p = draw();
  h.m = draw();
  h.a = draw.octonion(cls);
  return h;
}

}  // namespace octeig
