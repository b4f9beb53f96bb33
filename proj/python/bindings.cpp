#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knotmosaic/catalog.hpp"
#include "knotmosaic/describe.hpp"
#include "knotmosaic/layout.hpp"
#include "knotmosaic/pipeline.hpp"
#include "knotmosaic/trace.hpp"

namespace py = pybind11;
namespace km = knotmosaic;

namespace {

using Cells = std::vector<std::vector<int>>;

Cells to_cells(const km::MosaicGrid& g) {
  Cells out(g.size(), std::vector<int>(g.size()));
  for (int r = 0; r < g.size(); ++r)
    for (int c = 0; c < g.size(); ++c) out[r][c] = g.at(r, c).kind();
  return out;
}

km::MosaicGrid from_cells(const Cells& cells) {
  nlohmann::json j = {{"cells", cells}};
  return km::grid_from_json(j);
}

py::dict trace_dict(const Cells& cells) {
  const km::TraceResult t = km::trace(from_cells(cells));
  py::dict d;
  d["kind"] = std::string(km::trace_kind_name(t.kind));
  d["visits"] = t.visits.size();
  d["crossings"] = t.kind == km::TraceKind::Link ? py::object(py::none()) : py::int_(t.crossing_count());
  d["dt"] = t.kind == km::TraceKind::Knot ? py::cast(km::dt_code(km::gauss_pairs(t)).entries) : py::object(py::none());
  return d;
}

py::dict stats_dict(const km::RunStats& s) {
  py::dict d;
  d["enumerated"] = s.enumerated;
  d["links"] = s.links;
  d["unknots"] = s.unknots;
  d["unidentified"] = s.unidentified;
  d["ambiguous"] = s.ambiguous;
  d["prime_hits"] = s.prime_hits;
  return d;
}

class PyCatalog {
 public:
  explicit PyCatalog(const std::string& path) : index_(km::bootstrap_fingerprints(km::Catalog::load(path))) {}

  std::size_t size() const { return index_.catalog().size(); }

  std::string describe(const Cells& cells) const { return km::describe_mosaic(from_cells(cells), index_).dump(); }

  std::string identify_pd(const std::string& pd) const { return km::identify(km::parse_pd(pd), index_).label(); }

  std::vector<std::vector<std::string>> collisions() const { return km::collision_report(index_); }

  py::dict run_layout(const std::string& layout_text, int min_crossings, int shard_index, int shard_total,
                      int jobs) const {
    const km::Layout layout = km::parse_layout(layout_text);
    km::LayoutRun run;
    {
      py::gil_scoped_release release;
      run = km::run_layout(layout, index_, min_crossings, shard_index, shard_total, jobs);
    }
    std::vector<std::string> hits;
    for (const auto& h : run.hits) hits.push_back(km::format_hit(h));
    py::dict d;
    d["stats"] = stats_dict(run.stats);
    d["hits"] = hits;
    return d;
  }

 private:
  km::FingerprintIndex index_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Knot mosaic tracing, invariants and identification.";

  py::register_exception<km::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<km::TraceError>(m, "TraceError", PyExc_ValueError);
  py::register_exception<km::InvalidPDError>(m, "InvalidPDError", PyExc_ValueError);
  py::register_exception<km::LayoutError>(m, "LayoutError", PyExc_ValueError);
  py::register_exception<km::CatalogError>(m, "CatalogError", PyExc_RuntimeError);

  m.def("parse_matrix", [](const std::string& text) { return to_cells(km::parse_matrix(text)); }, py::arg("text"),
        "Parse matrix text (rows split by newlines or '/') into a list of rows.");
  m.def("serialize_matrix", [](const Cells& cells) { return km::serialize_matrix(from_cells(cells)); },
        py::arg("cells"));
  m.def("is_suitably_connected", [](const Cells& cells) { return km::is_suitably_connected(from_cells(cells)); },
        py::arg("cells"));
  m.def("trace", &trace_dict, py::arg("cells"), "Walk the strand: kind, visit count, crossings and DT code.");
  m.def(
      "dt_from_gauss",
      [](std::vector<std::pair<int, int>> pairs) { return km::dt_code(km::GaussPairs(std::move(pairs))).entries; },
      py::arg("pairs"));
  m.def("count_candidates", &km::count_candidates, py::arg("n"), py::arg("min_crossings"));
  m.def(
      "pd_of", [](const Cells& cells) { return km::format_pd(km::to_pd(km::trace(from_cells(cells)))); },
      py::arg("cells"));
  m.def(
      "fingerprint", [](const std::string& pd) { return km::fingerprint(km::parse_pd(pd)).serialize(); },
      py::arg("pd"), "'jones | alexander | determinant' with Jones exponents multiplied by 4.");

  py::class_<PyCatalog>(m, "Catalog")
      .def(py::init<const std::string&>(), py::arg("path"))
      .def("__len__", &PyCatalog::size)
      .def("describe_json", &PyCatalog::describe, py::arg("cells"))
      .def("identify_pd", &PyCatalog::identify_pd, py::arg("pd"))
      .def("collisions", &PyCatalog::collisions)
      .def("run_layout", &PyCatalog::run_layout, py::arg("layout"), py::arg("min_crossings") = 0,
           py::arg("shard_index") = 0, py::arg("shard_total") = 1, py::arg("jobs") = 1);
}
