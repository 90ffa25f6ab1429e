#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monosym/json_io.hpp"
#include "monosym/oracle.hpp"
#include "monosym/parser.hpp"
#include "monosym/tn.hpp"

namespace py = pybind11;
using namespace monosym;

namespace {

Poly poly_from_expr(const std::string& src, int n) {
  return lang::lower(lang::parse(src, n), n);
}

std::string powersum_str(const symfunc::PowerSumExpr& e) {
  std::vector<std::string> names;
  for (int k = 1; k <= e.n_vars; ++k) names.push_back("p" + std::to_string(k));
  return e.expr.to_string_names(names);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computer algebra for the algebra generated by odd power sums";

  py::class_<Poly>(m, "Poly")
      .def(py::init([](const std::string& src, int n) { return poly_from_expr(src, n); }),
           py::arg("expr"), py::arg("n"))
      .def_property_readonly("n_vars", &Poly::n_vars)
      .def_property_readonly("degree",
                             [](const Poly& p) -> py::object {
                               auto d = p.total_degree();
                               return d ? py::cast(*d) : py::none();
                             })
      .def("is_zero", &Poly::is_zero)
      .def("is_homogeneous", &Poly::is_homogeneous)
      .def("homogeneous_component", &Poly::homogeneous_component)
      .def("eval",
           [](const Poly& p, const std::vector<std::string>& point) {
             std::vector<Rational> q;
             for (const auto& s : point) q.push_back(rat_from_string(s));
             return rat_to_string(p.eval(q));
           })
      .def("to_json", [](const Poly& p) { return poly_to_json(p).dump(); })
      .def_static("from_json",
                  [](const std::string& j) { return poly_from_json(nlohmann::json::parse(j)); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__pow__", [](const Poly& p, int e) { return p.pow(e); })
      .def("__str__", &Poly::to_string)
      .def("__repr__", [](const Poly& p) { return "Poly(" + p.to_string() + ")"; });

  py::class_<ProperProduct>(m, "ProperProduct")
      .def_readonly("n", &ProperProduct::n)
      .def_readonly("low_exps", &ProperProduct::low_exps)
      .def_readonly("elders", &ProperProduct::elders)
      .def("degree", &ProperProduct::degree)
      .def("expand", &ProperProduct::expand)
      .def("__str__", &ProperProduct::to_string);

  py::class_<Decomposition>(m, "Decomposition")
      .def_readonly("n", &Decomposition::n)
      .def_readonly("d", &Decomposition::d)
      .def_readonly("basis", &Decomposition::basis)
      .def_property_readonly("coeffs",
                             [](const Decomposition& d) {
                               std::vector<std::string> out;
                               for (const auto& c : d.coeffs) out.push_back(rat_to_string(c));
                               return out;
                             })
      .def("expand", &Decomposition::expand)
      .def("to_json", [](const Decomposition& d) { return decomposition_to_json(d).dump(); })
      .def("__str__", &Decomposition::to_string);

  m.def("parse", &poly_from_expr, py::arg("expr"), py::arg("n"),
        "Parse an expression (p3, e2, h4, m[2,1], s[1,1], delta, x1, rationals) into a Poly");
  m.def("power_sum", &symfunc::power_sum);
  m.def("elementary", &symfunc::elementary);
  m.def("complete_h", &symfunc::complete_h);
  m.def("monomial_sym",
        [](int n, const std::vector<int>& lam) { return symfunc::monomial_sym(n, Partition(lam)); });
  m.def("schur", [](int n, const std::vector<int>& lam) { return symfunc::schur(n, Partition(lam)); });
  m.def("delta", &delta);
  m.def("is_symmetric", &symfunc::is_symmetric);
  m.def("repr_in_power_sums",
        [](const Poly& f) { return powersum_str(symfunc::repr_in_power_sums(f)); });

  m.def("is_member", [](const Poly& p) {
    const Membership mem = check_member(p);
    return py::make_tuple(mem.member, mem.reason);
  });
  m.def("decompose", &decompose);
  m.def("dim", &dim_Tn, py::arg("n"), py::arg("d"));
  m.def("basis", &enumerate_proper_products, py::arg("n"), py::arg("d"));
  m.def("dim_kernel", &oracle::dim_kernel, py::arg("n"), py::arg("d"));

  m.def(
      "run_suite",
      [](int nmax, int dmax, int trials, std::uint64_t seed, const std::vector<std::string>& claims) {
        oracle::SuiteConfig config{claims, nmax, dmax, trials, seed};
        std::vector<std::string> out;
        for (const auto& cert : oracle::run_suite(config)) out.push_back(cert.to_json().dump());
        return out;
      },
      py::arg("nmax") = 4, py::arg("dmax") = 8, py::arg("trials") = 5,
      py::arg("seed") = 20240915ULL, py::arg("claims") = oracle::all_claims(),
      "Run the verification suite; returns one JSON certificate string per check");
}
