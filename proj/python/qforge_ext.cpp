#include <pybind11/chrono.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qforge/embedding.hpp"
#include "qforge/errors.hpp"
#include "qforge/formulas.hpp"
#include "qforge/graph.hpp"
#include "qforge/oracle.hpp"
#include "qforge/spinal.hpp"

namespace py = pybind11;
using namespace qforge;

namespace {

using Rotations = std::vector<std::vector<Vertex>>;

std::vector<std::vector<std::pair<Vertex, Vertex>>> faces_as_darts(const RotationSystem& r) {
  std::vector<std::vector<std::pair<Vertex, Vertex>>> out;
  for (const auto& f : trace_faces(r)) {
    auto& walk = out.emplace_back();
    for (const auto& d : f.darts) walk.emplace_back(d.tail, d.head);
  }
  return out;
}

oracle::SearchBudget make_budget(std::uint64_t max_nodes, double time_cap_seconds) {
  oracle::SearchBudget b;
  b.max_nodes = max_nodes;
  b.time_cap = std::chrono::milliseconds(static_cast<std::int64_t>(time_cap_seconds * 1000.0));
  return b;
}

}  // namespace

PYBIND11_MODULE(_qforge, m) {
  m.doc() = "Minimal quadrangulations of orientable surfaces: builder, verifier and search.";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<GenusMismatch>(m, "GenusMismatch", PyExc_ValueError);

  // graph
  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("vertex_count"))
      .def(py::init<std::size_t, std::vector<Edge>>(), py::arg("vertex_count"), py::arg("edges"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("edges", &Graph::edges)
      .def("has_edge", &Graph::has_edge)
      .def("adjacency", &Graph::adjacency)
      .def("degrees", &Graph::degrees)
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "Graph(" + std::to_string(g.vertex_count()) + " vertices, " +
               std::to_string(g.edge_count()) + " edges)";
      });

  m.def("complete_graph", &complete_graph, py::arg("p"));
  m.def("octahedral_graph", &octahedral_graph, py::arg("p"));
  m.def("is_connected", &is_connected);
  m.def("betti", &betti);
  m.def("delete_edges_connected", &delete_edges_connected, py::arg("graph"), py::arg("m"));
  m.def("interlace", &interlace);
  m.def("save_graph", &save_graph);
  m.def("load_graph", [](const std::string& doc) { return load_graph(doc); });

  // embedding
  py::class_<RotationSystem>(m, "RotationSystem")
      .def(py::init<Rotations>(), py::arg("rotations"))
      .def(py::init<const Graph&, Rotations>(), py::arg("graph"), py::arg("rotations"))
      .def_property_readonly("graph", &RotationSystem::graph)
      .def_property_readonly("vertex_count", &RotationSystem::vertex_count)
      .def_property_readonly("edge_count", &RotationSystem::edge_count)
      .def_property_readonly("rotations", &RotationSystem::rotations)
      .def("canonical_rotations", &RotationSystem::canonical_rotations)
      .def("successor",
           [](const RotationSystem& r, Vertex u, Vertex v) {
             const Dart d = r.successor({u, v});
             return std::make_pair(d.tail, d.head);
           })
      .def(py::self == py::self);

  py::class_<EmbeddingReport>(m, "EmbeddingReport")
      .def_readonly("alpha0", &EmbeddingReport::alpha0)
      .def_readonly("alpha1", &EmbeddingReport::alpha1)
      .def_readonly("alpha2", &EmbeddingReport::alpha2)
      .def_readonly("euler_characteristic", &EmbeddingReport::euler_characteristic)
      .def_readonly("genus", &EmbeddingReport::genus)
      .def_readonly("is_quadrangulation", &EmbeddingReport::is_quadrangulation)
      .def_readonly("failures", &EmbeddingReport::failures);

  m.def("trace_faces", &faces_as_darts, "Face boundary walks as lists of (tail, head) darts.");
  m.def("euler_genus", [](const RotationSystem& r) {
    const auto eg = euler_genus(r);
    return std::make_pair(eg.chi, eg.genus);
  });
  m.def("validate_quadrangulation", &validate_quadrangulation);
  m.def("save_embedding", &save_embedding, py::arg("embedding"), py::arg("declared_genus") = py::none());
  m.def("load_embedding", [](const std::string& doc) { return load_embedding(doc); });

  // spinal
  py::class_<spinal::SpinalInstance>(m, "SpinalInstance")
      .def_readonly("p", &spinal::SpinalInstance::p)
      .def_readonly("m", &spinal::SpinalInstance::m)
      .def_readonly("genus", &spinal::SpinalInstance::genus)
      .def_readonly("certified_minimal", &spinal::SpinalInstance::certified_minimal)
      .def_readonly("spine", &spinal::SpinalInstance::spine)
      .def_readonly("embedding", &spinal::SpinalInstance::embedding);

  m.def("build_spinal", &spinal::build_spinal, py::arg("spine"));
  m.def("build_instance", &spinal::build_instance, py::arg("p"), py::arg("m") = 0);
  m.def("build_for_genus", &spinal::build_for_genus, py::arg("g"), py::arg("p"));

  // formulas
  auto f = m.def_submodule("formulas", "Exact integer formulas for the minimum order.");
  f.def("isqrt", &formulas::isqrt);
  f.def("ceil_a", &formulas::ceil_a);
  f.def("floor_b", &formulas::floor_b);
  f.def("gate", &formulas::gate);
  f.def("octahedral_value", [](std::int64_t g) -> std::optional<std::pair<std::int64_t, std::int64_t>> {
    const auto v = formulas::octahedral_value(g);
    if (!v) return std::nullopt;
    return std::make_pair(v->order, v->p);
  });
  f.def("lower_bound", &formulas::lower_bound);
  f.def("spinal_min_order", &formulas::spinal_min_order);
  f.def("betti_complete", &formulas::betti_complete);
  f.def("spectrum", &formulas::spectrum, py::arg("g"), py::arg("p_max"));

  py::enum_<formulas::Kind>(f, "Kind")
      .value("Exact", formulas::Kind::Exact)
      .value("Bounds", formulas::Kind::Bounds);

  py::class_<formulas::MinOrderResult>(f, "MinOrderResult")
      .def_readonly("genus", &formulas::MinOrderResult::genus)
      .def_readonly("kind", &formulas::MinOrderResult::kind)
      .def_readonly("value", &formulas::MinOrderResult::value)
      .def_readonly("lower", &formulas::MinOrderResult::lower)
      .def_readonly("upper", &formulas::MinOrderResult::upper)
      .def_property_readonly("source",
                             [](const formulas::MinOrderResult& r) { return formulas::to_string(r.source); })
      .def("summary", &formulas::MinOrderResult::summary)
      .def("__repr__", &formulas::MinOrderResult::summary);

  f.def("min_order", &formulas::min_order, py::arg("g"));

  // oracle
  auto o = m.def_submodule("oracle", "Exhaustive search for small quadrangulations.");
  py::enum_<oracle::Verdict>(o, "Verdict")
      .value("Exists", oracle::Verdict::Exists)
      .value("DoesNotExist", oracle::Verdict::DoesNotExist)
      .value("Inconclusive", oracle::Verdict::Inconclusive);

  py::class_<oracle::SearchResult>(o, "SearchResult")
      .def_readonly("verdict", &oracle::SearchResult::verdict)
      .def_readonly("witness", &oracle::SearchResult::witness)
      .def_readonly("nodes", &oracle::SearchResult::nodes)
      .def_readonly("graphs_examined", &oracle::SearchResult::graphs_examined)
      .def_readonly("arithmetic", &oracle::SearchResult::arithmetic);

  py::class_<oracle::MinOrderSearch>(o, "MinOrderSearch")
      .def_readonly("verdict", &oracle::MinOrderSearch::verdict)
      .def_readonly("order", &oracle::MinOrderSearch::order)
      .def_readonly("witness", &oracle::MinOrderSearch::witness);

  o.def("quad_edge_count", &oracle::quad_edge_count, py::arg("n"), py::arg("g"));
  o.def(
      "find_quadrangular_embedding",
      [](const Graph& g, std::uint64_t max_nodes, double time_cap) {
        py::gil_scoped_release release;
        return oracle::find_quadrangular_embedding(g, make_budget(max_nodes, time_cap));
      },
      py::arg("graph"), py::arg("max_nodes") = 100'000'000, py::arg("time_cap") = 900.0);
  o.def(
      "exists_quadrangulation",
      [](std::int64_t n, std::int64_t g, std::uint64_t max_nodes, double time_cap, bool prune) {
        oracle::SearchOptions opts;
        opts.prune_degree_two = prune;
        py::gil_scoped_release release;
        return oracle::exists_quadrangulation(n, g, make_budget(max_nodes, time_cap), opts);
      },
      py::arg("n"), py::arg("g"), py::arg("max_nodes") = 100'000'000, py::arg("time_cap") = 900.0,
      py::arg("prune_degree_two") = true);
  o.def(
      "min_order_bruteforce",
      [](std::int64_t g, std::uint64_t max_nodes, double time_cap) {
        py::gil_scoped_release release;
        return oracle::min_order_bruteforce(g, make_budget(max_nodes, time_cap));
      },
      py::arg("g"), py::arg("max_nodes") = 100'000'000, py::arg("time_cap") = 900.0);
}
