#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coxnerve/actdim.hpp"
#include "coxnerve/classify.hpp"
#include "coxnerve/error.hpp"
#include "coxnerve/examples.hpp"
#include "coxnerve/homology.hpp"
#include "coxnerve/abelian.hpp"
#include "coxnerve/serialize.hpp"
#include "coxnerve/simcomplex.hpp"
#include "coxnerve/verify.hpp"

namespace py = pybind11;
using namespace coxnerve;

namespace {

GeneratorSet subset_of(const CoxeterMatrix& m, const std::optional<std::vector<std::string>>& names) {
  return names ? m.subset(*names) : m.all();
}

std::string dump(const nlohmann::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Nerves, nested-set subdivisions and action-dimension bounds for Artin groups";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<LemmaViolation>(m, "LemmaViolation", PyExc_RuntimeError);

  py::class_<CoxeterMatrix>(m, "CoxeterMatrix")
      .def_static("from_json", [](const std::string& doc) { return parse_coxeter_matrix(doc); }, py::arg("document"))
      .def_static("example", &generate_example, py::arg("name"))
      .def("to_json",
           [](const CoxeterMatrix& self, const std::string& default_label) {
             return serialize_coxeter_matrix(self, default_label == "inf" ? Label::infinity() : Label::finite(2));
           },
           py::arg("default") = "2")
      .def_property_readonly("generators", &CoxeterMatrix::generators)
      .def("__len__", &CoxeterMatrix::size)
      .def("label",
           [](const CoxeterMatrix& self, const std::string& s, const std::string& t) -> std::optional<int> {
             const Label l = self.m(self.index_of(s), self.index_of(t));
             if (l.is_infinite()) return std::nullopt;
             return static_cast<int>(l.value());
           },
           "Coxeter label m(s, t); None for infinity.", py::arg("s"), py::arg("t"))
      .def("__eq__", [](const CoxeterMatrix& a, const CoxeterMatrix& b) { return a == b; })
      .def("__repr__", [](const CoxeterMatrix& self) {
        return "<CoxeterMatrix " + self.format_subset(self.all()) + ">";
      });

  m.def("example_names", &example_names);
  m.def("is_spherical",
        [](const CoxeterMatrix& cm, std::optional<std::vector<std::string>> t) {
          return is_spherical(cm, subset_of(cm, t));
        },
        py::arg("matrix"), py::arg("subset") = py::none());
  m.def("finite_type",
        [](const CoxeterMatrix& cm, std::optional<std::vector<std::string>> t) -> std::optional<std::string> {
          const auto ft = recognize_finite_type(cm, subset_of(cm, t));
          if (!ft) return std::nullopt;
          return ft->name();
        },
        "Name of the finite type of a connected subset, or None.", py::arg("matrix"), py::arg("subset") = py::none());
  m.def("spherical_actdim", &spherical_actdim, py::arg("matrix"));

  m.def("_nerve", [](const CoxeterMatrix& cm) { return dump(to_json(nerve(cm))); });
  m.def("_subdivide", [](const CoxeterMatrix& cm) { return dump(to_json(subdivide(cm).complex)); });
  m.def("_octahedralize", [](const CoxeterMatrix& cm, const std::string& which) {
    if (which == "nerve") return dump(to_json(octahedralize(nerve(cm))));
    if (which == "subdivision") return dump(to_json(octahedralize(subdivide(cm).complex)));
    throw InputError("complex must be 'nerve' or 'subdivision'");
  });
  m.def("_homology", [](const CoxeterMatrix& cm) {
    nlohmann::json j = {{"nerve", to_json(betti_profile(nerve(cm)))},
                        {"subdivision", to_json(betti_profile(subdivide(cm).complex))}};
    return dump(j);
  });
  m.def("_roots", [](const CoxeterMatrix& cm, std::optional<std::vector<std::string>> t) {
    if (t) return dump(to_json(cm, positive_roots(cm, cm.subset(*t))));
    if (is_spherical(cm, cm.all())) return dump(to_json(cm, positive_roots(cm, cm.all())));
    return dump(to_json(cm, reflection_index(cm).roots()));
  });
  m.def("_report", [](const CoxeterMatrix& cm, bool assume) {
    return dump(to_json(action_dimension_report(cm, assume)));
  });
  m.def("verify", [](const CoxeterMatrix& cm) {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    {
      py::gil_scoped_release release;
      for (auto& c : verify_all(cm)) out.emplace_back(c.name, c.passed, c.detail);
    }
    return out;
  }, "Run every structural check; list of (name, passed, detail).", py::arg("matrix"));
}
