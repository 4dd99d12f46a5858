// Python bindings for the main operations.  Structured values cross the
// boundary as JSON-compatible dicts (the same schemas the CLI emits), which
// keeps the Python surface free of wrapper classes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstddef>
#include <string>
#include <vector>

#include "zerok/errors.hpp"
#include "zerok/families.hpp"
#include "zerok/homology.hpp"
#include "zerok/io.hpp"
#include "zerok/ktheory.hpp"

namespace py = pybind11;

namespace {

using zerok::Json;

py::object json_to_py(const Json& j) {
  py::module_ json = py::module_::import("json");
  return json.attr("loads")(j.dump());
}

Json py_to_json(const py::object& obj) {
  py::module_ json = py::module_::import("json");
  std::string text = py::cast<std::string>(json.attr("dumps")(obj));
  return Json::parse(text);
}

py::object homology_of(const py::object& complex_json) {
  zerok::ChainComplex c = zerok::complex_from_json(py_to_json(complex_json));
  std::vector<zerok::AbGroup> hs = zerok::homology_all(c);
  Json out = Json::array();
  for (const zerok::AbGroup& h : hs) out.push_back(zerok::abgroup_to_json(h));
  return json_to_py(out);
}

py::object ktheory_of(const py::object& complex_json) {
  zerok::ChainComplex c = zerok::complex_from_json(py_to_json(complex_json));
  return json_to_py(zerok::kresult_to_json(zerok::assemble(zerok::homology_all(c))));
}

py::object graph_ktheory_py(const py::object& desc) {
  zerok::GraphDesc d = zerok::graph_desc_from_json(py_to_json(desc));
  return json_to_py(zerok::kresult_to_json(zerok::graph_ktheory(d)));
}

py::object graph_complex_py(const py::object& desc) {
  zerok::GraphDesc d = zerok::graph_desc_from_json(py_to_json(desc));
  return json_to_py(zerok::complex_to_json(zerok::graph_complex(d)));
}

py::object tiling_ktheory_py(const py::object& desc,
                             const std::vector<std::size_t>& depths,
                             bool check) {
  zerok::TilingDesc d = zerok::tiling_desc_from_json(py_to_json(desc));
  zerok::TilingKTheory t = zerok::tiling_ktheory(d, depths, check);
  Json out = Json::object();
  Json per = Json::array();
  for (const auto& r : t.per_depth) {
    Json e = Json::object();
    e["depth"] = r.depth;
    e["result"] = zerok::kresult_to_json(r.k);
    per.push_back(std::move(e));
  }
  out["depths"] = std::move(per);
  out["stabilized"] = t.stabilized;
  out["notes"] = t.notes;
  return json_to_py(out);
}

py::object raam_ktheory_py(const py::object& desc) {
  zerok::RaamDesc d = zerok::raam_desc_from_json(py_to_json(desc));
  return json_to_py(zerok::kresult_to_json(zerok::raam_ktheory(d)));
}

py::object nq_ktheory_py(const std::vector<long long>& primes, bool check) {
  zerok::NqDesc d;
  for (long long p : primes) d.primes.push_back(zerok::Int(p));
  return json_to_py(zerok::kresult_to_json(zerok::nq_ktheory(d, check)));
}

py::object check_covers_py(const py::object& desc, std::size_t max_len,
                           std::size_t depth) {
  Json j = py_to_json(desc);
  std::string family = j.contains("family") && j.at("family").is_string()
                           ? j.at("family").get<std::string>()
                           : "";
  zerok::CheckReport rep;
  if (family == "graph")
    rep = zerok::graph_checks(zerok::graph_desc_from_json(j), max_len, depth);
  else if (family == "tiling")
    rep = zerok::tiling_checks(zerok::tiling_desc_from_json(j), max_len, depth);
  else if (family == "raam")
    rep = zerok::raam_checks(zerok::raam_desc_from_json(j), max_len, depth);
  else if (family == "nq")
    rep = zerok::nq_checks(zerok::nq_desc_from_json(j), depth);
  else
    throw zerok::input_error("'family' must be graph|tiling|raam|nq");
  return json_to_py(zerok::report_to_json(rep));
}

}  // namespace

PYBIND11_MODULE(_zerok, m) {
  m.doc() = "K-groups of ample groupoids from semilattice cover systems";

  py::register_exception<zerok::input_error>(m, "InputError",
                                             PyExc_ValueError);
  py::register_exception<zerok::refusal_error>(m, "RefusalError",
                                               PyExc_RuntimeError);
  py::register_exception<zerok::structure_error>(m, "StructureError",
                                                 PyExc_RuntimeError);

  m.def("homology", &homology_of, py::arg("complex"),
        "All homology groups of a chain complex given as "
        "{'ranks': [...], 'boundaries': [[row-major ints], ...]}");
  m.def("ktheory", &ktheory_of, py::arg("complex"),
        "Assembled K-groups of a chain complex");
  m.def("graph_ktheory", &graph_ktheory_py, py::arg("desc"),
        "K-groups of a finite graph {'vertices': [...], 'edges': [...]}");
  m.def("graph_complex", &graph_complex_py, py::arg("desc"),
        "The two-term boundary complex of a finite graph");
  m.def("tiling_ktheory", &tiling_ktheory_py, py::arg("desc"),
        py::arg("depths"), py::arg("check") = true,
        "Depth-swept K-groups of a one-dimensional tiling");
  m.def("raam_ktheory", &raam_ktheory_py, py::arg("desc"),
        "K-groups of a right-angled Artin monoid boundary");
  m.def("nq_ktheory", &nq_ktheory_py, py::arg("primes"),
        py::arg("check") = true,
        "K-groups of arithmetic progressions under x+1 and the given primes");
  m.def("check_covers", &check_covers_py, py::arg("desc"),
        py::arg("max_len") = 3, py::arg("depth") = 2,
        "Run the four cover-condition checkers; desc needs a 'family' key");
}
