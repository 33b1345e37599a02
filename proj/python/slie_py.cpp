// Python bindings: algebras travel as SuperAlgebra objects, results as dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "slie/capability.hpp"
#include "slie/catalog.hpp"
#include "slie/cli.hpp"
#include "slie/io.hpp"
#include "slie/multiplier.hpp"
#include "slie/recognize.hpp"

namespace py = pybind11;
using namespace slie;

namespace {

py::tuple dims(const GradedDim& d) { return py::make_tuple(d.even, d.odd); }

py::dict multiplier_dict(const MultiplierResult& r) {
  py::dict d;
  d["dim"] = dims(r.dim);
  d["total"] = r.dim.total();
  d["method"] = to_string(r.method);
  if (r.method == MultiplierMethod::Tags) {
    d["tag_count"] = r.tag_count;
    d["relation_rank"] = r.relation_rank;
    d["free_generators"] = r.free_generators;
  }
  if (r.method == MultiplierMethod::Formula) d["family"] = r.family;
  return d;
}

std::vector<std::string> basis_text(const SuperAlgebra& a, const GradedSubspace& s) {
  std::vector<std::string> out;
  for (const auto& v : s.basis_vectors()) out.push_back(format_vector(a, v));
  return out;
}

GradedIdeal ideal_from(const SuperAlgebra& a, const std::vector<std::string>& gens) {
  std::vector<Vector> vs;
  for (const auto& g : gens) vs.push_back(parse_vector(a, g));
  return GradedIdeal(a, vs);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations for nilpotent Lie superalgebras";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  auto alg_err = py::register_exception<AlgebraError>(m, "AlgebraError", PyExc_RuntimeError);
  py::register_exception<NotNilpotent>(m, "NotNilpotent", alg_err.ptr());

  py::class_<SuperAlgebra>(m, "SuperAlgebra")
      .def_static(
          "parse",
          [](const std::string& text, bool strict) {
            return parse_algebra(text, strict ? ParseMode::Strict : ParseMode::Lenient);
          },
          py::arg("text"), py::arg("strict") = true)
      .def_property_readonly("name", &SuperAlgebra::name)
      .def_property_readonly("dim", [](const SuperAlgebra& a) { return dims(a.dim()); })
      .def_property_readonly("names", &SuperAlgebra::basis_names)
      .def("is_abelian", &SuperAlgebra::is_abelian)
      .def("__eq__", [](const SuperAlgebra& a, const SuperAlgebra& b) { return a == b; })
      .def("__str__", &print_algebra)
      .def("__repr__", [](const SuperAlgebra& a) { return "<SuperAlgebra " + a.name() + " " + a.dim().str() + ">"; });

  m.def("catalog_ids", [] {
    std::vector<std::string> ids;
    for (const auto& e : load_catalog()) ids.push_back(e.id);
    return ids;
  });
  m.def("catalog_entry", [](const std::string& id) {
    const auto* e = find_entry(id);
    if (!e) throw py::key_error(id);
    return e->algebra;
  });

  m.def("violations", [](const SuperAlgebra& a) {
    std::vector<std::string> out;
    for (const auto& v : validate(a)) out.push_back(v.axiom + ": " + v.detail);
    return out;
  });

  m.def("invariants", [](const SuperAlgebra& a) {
    py::dict d;
    d["center"] = dims(center(a).dim());
    d["center_basis"] = basis_text(a, center(a));
    d["derived"] = dims(derived(a).dim());
    const auto lcs = lower_central_series(a);
    py::list terms;
    for (const auto& t : lcs.terms) terms.append(dims(t.dim()));
    d["lcs"] = terms;
    d["nilpotency_class"] = lcs.nilpotency_class ? py::cast(*lcs.nilpotency_class) : py::none();
    d["family"] = lcs.nilpotency_class ? recognize(a).str() : std::string("none");
    return d;
  });

  m.def(
      "multiplier",
      [](const SuperAlgebra& a, const std::string& method) {
        if (method == "tags") return multiplier_dict(multiplier_tags(a));
        if (method == "homology") return multiplier_dict(multiplier_homology(a));
        if (method == "formula") return multiplier_dict(multiplier_formula(recognize(a)));
        throw py::value_error("method must be tags, homology or formula");
      },
      py::arg("algebra"), py::arg("method") = "tags");
  m.def("multiplier_direct_sum",
        [](const SuperAlgebra& h, const SuperAlgebra& k) { return multiplier_dict(multiplier_direct_sum(h, k)); });

  m.def(
      "capability",
      [](const SuperAlgebra& a, std::size_t grid) {
        const auto v = capability_verdict(a, grid);
        py::dict d;
        d["status"] = to_string(v.status);
        d["rule"] = v.rule;
        d["witness"] = v.witness ? py::cast(basis_text(a, *v.witness)) : py::none();
        d["notes"] = v.notes;
        d["cross_check"] = v.cross_check;
        return d;
      },
      py::arg("algebra"), py::arg("grid_bound") = 2);
  m.def("epicenter", [](const SuperAlgebra& a) { return basis_text(a, epicenter(a)); });

  m.def("quotient", [](const SuperAlgebra& a, const std::vector<std::string>& gens) {
    return quotient(a, ideal_from(a, gens));
  });
  m.def("direct_sum", &direct_sum);

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
