#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>

#include "octeig/commands.hpp"
#include "octeig/eigensolve.hpp"
#include "octeig/embed_oracle.hpp"
#include "octeig/hermitian.hpp"
#include "octeig/matrix_file.hpp"
#include "octeig/octonion.hpp"

namespace py = pybind11;
using namespace octeig;

namespace {

Octonion from_coeffs(const std::array<double, 8>& c) { return Octonion(c); }

MatrixClass to_class(const std::string& name) { return parse_matrix_class(name); }

// JSON text plus exit code, mirroring the CLI.
py::tuple result_tuple(const CommandResult& r) { return py::make_tuple(r.exit_code, r.output, r.error); }

py::array_t<double> to_array(const RealSymMatrix& m) {
  const std::size_t n = m.size();
  py::array_t<double> out({n, n});
  auto w = out.mutable_unchecked<2>();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) w(r, c) = m(r, c);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Octonionic Hermitian eigenvalue solver";

  py::register_exception<SolverDefect>(m, "SolverDefect");
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Octonion>(m, "Octonion")
      .def(py::init<>())
      .def(py::init<double>())
      .def(py::init(&from_coeffs), py::arg("coeffs"))
      .def_static("unit", [](std::size_t k) {
        if (k >= 8) throw py::index_error("unit index must be in [0, 8)");
        return Octonion::unit(k);
      })
      .def_property_readonly("coeffs", &Octonion::coeffs)
      .def("__getitem__", [](const Octonion& o, std::size_t k) {
        if (k >= 8) throw py::index_error();
        return o[k];
      })
      .def("__len__", [](const Octonion&) { return 8; })
      .def("real", &Octonion::real)
      .def("conj", [](const Octonion& o) { return conj(o); })
      .def("norm", [](const Octonion& o) { return norm(o); })
      .def("inverse", [](const Octonion& o) { return inverse(o); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self * py::self)
      .def(py::self * double())
      .def(double() * py::self)
      .def(py::self / double())
      .def(py::self == py::self)
      .def("__repr__", [](const Octonion& o) {
        std::ostringstream os;
        os << "Octonion(" << o << ")";
        return os.str();
      });

  py::module_ b = m.def_submodule("basis", "Units in basis order (1, i, j, k, l, il, jl, kl)");
  b.attr("one") = basis::one;
  b.attr("i") = basis::i;
  b.attr("j") = basis::j;
  b.attr("k") = basis::k;
  b.attr("l") = basis::l;
  b.attr("il") = basis::il;
  b.attr("jl") = basis::jl;
  b.attr("kl") = basis::kl;

  m.def("associator", &associator);
  m.def("phi", &phi);

  py::class_<Herm2>(m, "Herm2", "[[p, a], [conj(a), m]]")
      .def(py::init([](double p, double mm, const Octonion& a) { return Herm2{p, mm, a}; }),
           py::arg("p"), py::arg("m"), py::arg("a"))
      .def_readwrite("p", &Herm2::p)
      .def_readwrite("m", &Herm2::m)
      .def_readwrite("a", &Herm2::a);

  py::class_<Herm3>(m, "Herm3", "[[p, a, conj(b)], [conj(a), m, c], [b, conj(c), n]]")
      .def(py::init([](double p, double mm, double n, const Octonion& a, const Octonion& bb,
                       const Octonion& c) { return Herm3{p, mm, n, a, bb, c}; }),
           py::arg("p"), py::arg("m"), py::arg("n"), py::arg("a"), py::arg("b"), py::arg("c"))
      .def_static("diag", &Herm3::diag)
      .def_readwrite("p", &Herm3::p)
      .def_readwrite("m", &Herm3::m)
      .def_readwrite("n", &Herm3::n)
      .def_readwrite("a", &Herm3::a)
      .def_readwrite("b", &Herm3::b)
      .def_readwrite("c", &Herm3::c);

  m.def("conj_matrix", [](const Herm2& a) { return conj_matrix(a); });
  m.def("conj_matrix", [](const Herm3& a) { return conj_matrix(a); });
  m.def("det2", &det2);
  m.def("det3", &det3);
  m.def("sigma", &sigma);
  m.def("char_residual", py::overload_cast<const Herm2&>(&char_residual));
  m.def("char_residual", py::overload_cast<const Herm3&>(&char_residual));

  py::class_<EigenPair2>(m, "EigenPair2")
      .def_readonly("eigenvalue", &EigenPair2::lambda)
      .def_readonly("eigenvector", &EigenPair2::v);
  py::class_<Family>(m, "Family")
      .def_readonly("r", &Family::r)
      .def_readonly("eigenvalues", &Family::lambdas)
      .def_readonly("eigenvectors", &Family::eigvecs);
  py::class_<Spectrum3>(m, "Spectrum3")
      .def_readonly("families", &Spectrum3::families)
      .def_readonly("doubled", &Spectrum3::doubled);
  py::class_<FamilyResiduals>(m, "FamilyResiduals")
      .def_readonly("eigen", &FamilyResiduals::eigen)
      .def_readonly("orthogonality", &FamilyResiduals::orthogonality)
      .def_readonly("normalization", &FamilyResiduals::normalization)
      .def_readonly("completeness", &FamilyResiduals::completeness)
      .def_readonly("reconstruction", &FamilyResiduals::reconstruction);

  m.def("eigenvalues2", &eigenvalues2);
  m.def("decompose2", &decompose2);
  m.def("r_roots", &r_roots);
  m.def("family_eigenvalues", &family_eigenvalues, py::arg("a"), py::arg("r"));
  m.def("decompose3", &decompose3, py::arg("a"), py::arg("r"));
  m.def("solve3", &solve3);
  m.def("family_residuals", &family_residuals);

  m.def("verify_right_eigen", [](const Herm2& a, const OctVec2& v, const Octonion& l) { return verify_right_eigen(a, v, l); });
  m.def("verify_right_eigen", [](const Herm3& a, const OctVec3& v, const Octonion& l) { return verify_right_eigen(a, v, l); });
  m.def("verify_left_eigen", [](const Herm2& a, const OctVec2& v, const Octonion& l) { return verify_left_eigen(a, v, l); });
  m.def("verify_left_eigen", [](const Herm3& a, const OctVec3& v, const Octonion& l) { return verify_left_eigen(a, v, l); });
  m.def("three_psi_check", &three_psi_check<2>);
  m.def("three_psi_check", &three_psi_check<3>);

  py::class_<Cluster>(m, "Cluster")
      .def_readonly("value", &Cluster::value)
      .def_readonly("count", &Cluster::count)
      .def("__repr__", [](const Cluster& c) {
        return "Cluster(" + std::to_string(c.value) + ", " + std::to_string(c.count) + ")";
      });
  m.def("embed", [](const Herm2& a) { return to_array(embed(a)); });
  m.def("embed", [](const Herm3& a) { return to_array(embed(a)); });
  m.def("jacobi_eigenvalues", [](const Herm3& a) { return jacobi_eigen(embed(a)).eigenvalues; });
  m.def("jacobi_eigenvalues", [](const Herm2& a) { return jacobi_eigen(embed(a)).eigenvalues; });
  m.def("spectrum_with_multiplicity", py::overload_cast<const Herm2&>(&spectrum_with_multiplicity));
  m.def("spectrum_with_multiplicity", py::overload_cast<const Herm3&>(&spectrum_with_multiplicity));
  m.def("kernel_basis", &kernel_basis);

  m.def("parse_matrix", [](const std::string& text) { return parse_matrix(text); });
  m.def("serialize_matrix", [](const Herm2& a) { return serialize_matrix(MatrixInput{a}); });
  m.def("serialize_matrix", [](const Herm3& a) { return serialize_matrix(MatrixInput{a}); });
  m.def("random_herm3", [](std::uint64_t seed, const std::string& cls, double scale) {
    return random_herm3(seed, to_class(cls), scale);
  }, py::arg("seed"), py::arg("cls") = "octonionic", py::arg("scale") = 1.0);
  m.def("random_herm2", [](std::uint64_t seed, const std::string& cls, double scale) {
    return random_herm2(seed, to_class(cls), scale);
  }, py::arg("seed"), py::arg("cls") = "octonionic", py::arg("scale") = 1.0);

  // Command layer: each returns (exit_code, stdout_text, stderr_text).
  m.def("run_eigen", [](const MatrixInput& a, std::optional<std::string> family,
                        std::optional<double> tol, bool pretty) {
    EigenOptions o;
    if (family) o.family = parse_family_select(*family);
    o.tol = tol;
    o.pretty = pretty;
    return result_tuple(run_eigen(a, o));
  }, py::arg("a"), py::arg("family") = py::none(), py::arg("tol") = py::none(), py::arg("pretty") = false);
  m.def("run_verify", [](const MatrixInput& a, bool corrupt, bool pretty) {
    return result_tuple(run_verify(a, {corrupt, pretty}));
  }, py::arg("a"), py::arg("corrupt") = false, py::arg("pretty") = false);
  m.def("run_oracle", [](const MatrixInput& a, bool pretty) { return result_tuple(run_oracle(a, pretty)); },
        py::arg("a"), py::arg("pretty") = false);
  m.def("cmd_random", [](std::uint64_t seed, const std::string& cls, double scale, int dim) {
    return result_tuple(cmd_random(seed, to_class(cls), scale, dim));
  }, py::arg("seed"), py::arg("cls") = "octonionic", py::arg("scale") = 1.0, py::arg("dim") = 3);
}
