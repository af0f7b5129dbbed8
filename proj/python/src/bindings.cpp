#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nquandle/catalog.hpp"
#include "nquandle/diagram.hpp"
#include "nquandle/enumerator.hpp"
#include "nquandle/families.hpp"
#include "nquandle/presentation.hpp"
#include "nquandle/quandle.hpp"

namespace py = pybind11;
using namespace nquandle;

namespace {

Sign sign_of(bool inverse) { return inverse ? Sign::minus : Sign::plus; }

std::vector<std::size_t> orbit_list(const FiniteQuandle& q) {
  return orbits(q).orbit_of;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fundamental N-quandles of links by tracing and collapsing.";

  py::register_exception<PresentationError>(m, "PresentationError", PyExc_ValueError);
  py::register_exception<CatalogError>(m, "CatalogError", PyExc_KeyError);

  py::class_<Presentation>(m, "Presentation")
      .def_readonly("generator_names", &Presentation::generator_names)
      .def_readonly("component_of", &Presentation::component_of)
      .def_readonly("orders", &Presentation::orders)
      .def_property_readonly("component_count", &Presentation::component_count)
      .def_property_readonly("relation_count",
                             [](const Presentation& p) { return p.relations.size(); })
      .def("__str__", &print_presentation)
      .def("__eq__", [](const Presentation& a, const Presentation& b) { return a == b; });

  m.def("parse_presentation", &parse_presentation, py::arg("text"));
  m.def("builtin_family",
        [](const std::string& id, std::optional<int> k) { return builtin_family(id, {k}); },
        py::arg("family"), py::arg("k") = py::none());
  m.def("builtin_family_ids", &builtin_family_ids);
  m.def("augment_orders", &augment_orders, py::arg("presentation"), py::arg("orders"));
  m.def("diagram_to_presentation",
        [](const std::string& jsonl) { return wirtinger(parse_diagram(jsonl)); },
        py::arg("jsonl"));

  py::class_<FiniteQuandle>(m, "Quandle")
      .def("__len__", &FiniteQuandle::size)
      .def_property_readonly("size", &FiniteQuandle::size)
      .def_property_readonly("generator_names", [](const FiniteQuandle& q) {
        return std::vector<std::string>(q.generator_names().begin(), q.generator_names().end());
      })
      .def("act",
           [](const FiniteQuandle& q, Element x, Generator g, bool inverse) {
             return q.act(x, g, sign_of(inverse));
           },
           py::arg("x"), py::arg("generator"), py::arg("inverse") = false)
      .def("op",
           [](const FiniteQuandle& q, Element x, Element y, bool inverse) {
             return full_op(q, x, y, sign_of(inverse));
           },
           py::arg("x"), py::arg("y"), py::arg("inverse") = false,
           "x ▷ y, or x ▷⁻¹ y with inverse=True.")
      .def("table", [](const FiniteQuandle& q) {
        const auto t = densify(q);
        std::vector<std::vector<Element>> rows(q.size(), std::vector<Element>(q.size()));
        for (Element x = 0; x < q.size(); ++x) {
          for (Element y = 0; y < q.size(); ++y) rows[x][y] = t.at(x, y);
        }
        return rows;
      }, "rows[x][y] = x ▷ y")
      .def("generator_element", &FiniteQuandle::generator_element)
      .def("witness", &FiniteQuandle::witness_text)
      .def("orbits", &orbit_list)
      .def("orbit_sizes", [](const FiniteQuandle& q) { return orbits(q).sizes(); })
      .def("point_symmetry", &point_symmetry)
      .def("verify_axioms", [](const FiniteQuandle& q) { return verify_axioms(q).describe(); })
      .def("verify_orders", [](const FiniteQuandle& q) { return verify_orders(q).describe(); })
      .def("verify_relations",
           [](const FiniteQuandle& q, const Presentation& p) {
             return verify_relations(q, p).describe();
           })
      .def("to_dot", &export_dot)
      .def("to_json", &export_json);

  py::class_<EnumerationOutcome>(m, "Outcome")
      .def_property_readonly("finite", &EnumerationOutcome::finite)
      .def_property_readonly("quandle",
                             [](const EnumerationOutcome& o) -> py::object {
                               if (!o.finite()) return py::none();
                               return py::cast(o.quandle());
                             })
      .def_property_readonly("exceeded_cap",
                             [](const EnumerationOutcome& o) -> py::object {
                               if (o.finite()) return py::none();
                               return py::str(o.exceeded().cap == CapKind::vertices ? "vertices"
                                                                                    : "steps");
                             })
      .def_property_readonly("vertex_count", [](const EnumerationOutcome& o) -> py::object {
        if (o.finite()) return py::int_(o.quandle().size());
        return py::int_(o.exceeded().vertex_count);
      });

  m.def("enumerate",
        [](const Presentation& p, std::size_t max_vertices, std::uint64_t max_steps) {
          py::gil_scoped_release release;
          return enumerate(p, {max_vertices, max_steps});
        },
        py::arg("presentation"), py::arg("max_vertices") = EnumerationLimits{}.max_vertices,
        py::arg("max_steps") = EnumerationLimits{}.max_steps);

  m.def("is_isomorphic", &is_isomorphic);

  m.def("expected_cardinality",
        [](const std::string& link, const std::vector<int>& orders, std::optional<int> k) {
          std::map<std::string, long long> params;
          if (k) params["k"] = *k;
          return expected_cardinality(link, orders, params);
        },
        py::arg("link"), py::arg("orders"), py::arg("k") = py::none());
}
