#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "circuitcat/amodelrec.hpp"
#include "circuitcat/emit.hpp"
#include "circuitcat/error.hpp"
#include "circuitcat/mutation.hpp"

namespace py = pybind11;
using namespace circuitcat;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Circuit make(const std::vector<Int>& a, const std::optional<std::vector<Int>>& nu) {
  return nu ? Circuit::validate(a, *nu) : Circuit::validate(a);
}

std::vector<std::vector<Int>> monomial_rows(const std::vector<Monomial>& ms) {
  std::vector<std::vector<Int>> out;
  for (const auto& m : ms) out.push_back(m.exponents);
  return out;
}

}  // namespace

PYBIND11_MODULE(_circuitcat, m) {
  m.doc() = "Mirror categories of elementary birational cobordisms";

  static py::exception<Error> circuit_error(m, "CircuitError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = circuit_error;
      PyErr_SetObject(exc.ptr(), py::make_tuple(to_string(e.code()), std::string(e.what())).ptr());
    }
  });

  py::class_<Circuit>(m, "Circuit")
      .def(py::init(&make), py::arg("a"), py::arg("nu") = py::none())
      .def_static("parse", &Circuit::parse)
      .def_property_readonly("a", &Circuit::a)
      .def_property_readonly("nu", &Circuit::nu)
      .def_property_readonly("perm", &Circuit::perm)
      .def_property_readonly("dim", &Circuit::dim)
      .def("__str__", &Circuit::to_string)
      .def("__repr__", [](const Circuit& c) { return "Circuit('" + c.to_string() + "')"; })
      .def("__eq__", [](const Circuit& x, const Circuit& y) { return x == y; });

  m.def("signature", [](const Circuit& c) {
    const Signature s = signature(c);
    return py::make_tuple(s.p, s.q);
  });
  m.def("volume", &volume);
  m.def("negate", &negate);
  m.def("info", [](const Circuit& c) { return to_python(info_json(c)); });
  m.def("decompose", [](const Circuit& c) {
    const Decomposition d = decompose(c);
    return py::make_tuple(d.b, d.c);
  });

  m.def("monomials_of_weight", [](const Circuit& c, Int w) { return monomial_rows(monomials_of_weight(c, w)); });
  m.def("grading", [](const Circuit& c, const std::vector<Int>& x) {
    const Bigrading g = grading(c, Monomial{x});
    return py::make_tuple(g.degree, g.weight);
  });
  m.def("multiply", [](const Circuit& c, const std::vector<Int>& x, const std::vector<Int>& y) {
    const SignedMonomial p = multiply(c, Monomial{x}, Monomial{y});
    return py::make_tuple(p.sign, p.monomial.exponents);
  });
  m.def("bmodel", [](const Circuit& c, int n) { return to_python(to_json(BCategory::build(c, n))); });
  m.def("amodel", [](const Circuit& c, int n) { return to_python(to_json(ACategory::build(c, n))); });
  m.def("quiver", [](const Circuit& c, int n) {
    std::vector<py::tuple> out;
    for (const Arrow& a : quiver(c, n)) out.push_back(py::make_tuple(a.source, a.target, a.label));
    return out;
  });
  m.def("emit_dot", py::overload_cast<const Circuit&, int>(&emit_dot));

  m.def("intersection_indices", &intersection_indices);
  m.def("intersection_count", &intersection_count);
  m.def("geometric_oracle", &geometric_oracle);
  m.def("chi", [](const Circuit& c, const std::vector<Int>& x) {
    const ChiImage img = chi(c, Monomial{x});
    return py::make_tuple(img.m, img.inner.exponents);
  });
  m.def("chi_inv", [](const Circuit& c, Int mi, const std::vector<Int>& inner) {
    return chi_inv(c, mi, Monomial{inner}).exponents;
  });
  m.def("verify_iso", [](const Circuit& c, int n) { return to_python(to_json(verify_iso(c, n))); });

  m.def("gram", [](const Circuit& c, int n) { return gram_of_collection(c, n).entries; });
  m.def("mutate_left", [](const std::vector<std::vector<Int>>& g, std::size_t i) {
    return mutate_left(GramMatrix::from_rows(g), i).entries;
  });
  m.def("mutate_right", [](const std::vector<std::vector<Int>>& g, std::size_t i) {
    return mutate_right(GramMatrix::from_rows(g), i).entries;
  });
  m.def("half_twist", [](const std::vector<std::vector<Int>>& g) { return half_twist(GramMatrix::from_rows(g)).entries; });
  m.def("check_koszul_duality", &check_koszul_duality);
}
