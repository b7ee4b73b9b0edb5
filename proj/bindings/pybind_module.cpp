#include "distsum/colorer.hpp"
#include "distsum/generators.hpp"
#include "distsum/graph.hpp"
#include "distsum/oracle.hpp"
#include "distsum/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace distsum;

namespace {

std::vector<std::tuple<int, int, Color>> coloring_items(const Graph& g, const EdgeColoring& c) {
    std::vector<std::tuple<int, int, Color>> items;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        items.emplace_back(u, v, c.get(e));
    }
    return items;
}

EdgeColoring coloring_from_items(const Graph& g,
                                 const std::vector<std::tuple<int, int, Color>>& items) {
    EdgeColoring c(g.edge_count());
    for (auto [u, v, col] : items) {
        int eid = g.edge_id(u, v);
        if (eid < 0) throw std::invalid_argument("edge not in graph");
        c.set(eid, col);
    }
    return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "distance-constrained sum-distinguishing edge colorings";

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return Graph::from_edge_list(n, edges);
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("edges", [](const Graph& g) { return g.edges(); })
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v); })
        .def("degree", &Graph::degree)
        .def("max_degree", &Graph::max_degree)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<BoundParams>(m, "BoundParams")
        .def_readonly("delta", &BoundParams::delta)
        .def_readonly("r", &BoundParams::r)
        .def_readonly("moore", &BoundParams::moore)
        .def_readonly("m_quot", &BoundParams::m_quot)
        .def_readonly("k_val", &BoundParams::k_val)
        .def_readonly("palette_max", &BoundParams::palette_max);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("proper", &VerificationReport::proper)
        .def_readonly("distinguishing", &VerificationReport::distinguishing)
        .def_readonly("max_color", &VerificationReport::max_color)
        .def_property_readonly("properness_violations",
                               [](const VerificationReport& r) {
                                   std::vector<std::tuple<int, std::pair<int, int>,
                                                          std::pair<int, int>>>
                                       out;
                                   for (const auto& v : r.properness_violations)
                                       out.emplace_back(v.vertex, v.edge_a, v.edge_b);
                                   return out;
                               })
        .def_property_readonly("conflicts",
                               [](const VerificationReport& r) {
                                   std::vector<std::tuple<int, int, int, Color>> out;
                                   for (const auto& c : r.conflicts)
                                       out.emplace_back(c.u, c.v, c.distance, c.sum);
                                   return out;
                               })
        .def("ok", &VerificationReport::ok);

    m.def("bound_params", &bound_params, py::arg("delta"), py::arg("r"));
    m.def("r_neighborhood", &r_neighborhood, py::arg("graph"), py::arg("v"), py::arg("r"));
    m.def("validate_colorable", &validate_colorable, py::arg("graph"));

    m.def("vizing_color", [](const Graph& g) { return coloring_items(g, vizing_color(g)); });
    m.def(
        "color_distinguishing",
        [](const Graph& g, int r) { return coloring_items(g, color_distinguishing(g, r)); },
        py::arg("graph"), py::arg("r"));
    m.def(
        "verify",
        [](const Graph& g, const std::vector<std::tuple<int, int, Color>>& items, int r) {
            return verify(g, coloring_from_items(g, items), r);
        },
        py::arg("graph"), py::arg("coloring"), py::arg("r"));
    m.def(
        "weighted_degree",
        [](const Graph& g, const std::vector<std::tuple<int, int, Color>>& items, int v) {
            return weighted_degree(g, coloring_from_items(g, items), v);
        },
        py::arg("graph"), py::arg("coloring"), py::arg("v"));

    auto exact = [](const Graph& g, int r, Color k_max, bool proper)
        -> std::optional<std::pair<Color, std::vector<std::tuple<int, int, Color>>>> {
        auto res = proper ? exact_index(g, r, k_max) : exact_sr(g, r, k_max);
        if (!res) return std::nullopt;
        return std::make_pair(res->k, coloring_items(g, res->witness));
    };
    m.def(
        "exact_index",
        [exact](const Graph& g, int r, Color k_max) { return exact(g, r, k_max, true); },
        py::arg("graph"), py::arg("r"), py::arg("k_max"));
    m.def(
        "exact_sr",
        [exact](const Graph& g, int r, Color k_max) { return exact(g, r, k_max, false); },
        py::arg("graph"), py::arg("r"), py::arg("k_max"));

    m.def("path_graph", &path_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("star_graph", &star_graph);
    m.def("complete_graph", &complete_graph);
    m.def("complete_bipartite", &complete_bipartite);
    m.def("random_graph", &random_graph, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("de_bruijn_undirected", &de_bruijn_undirected, py::arg("d"), py::arg("r"));
    m.def("all_connected", &all_connected, py::arg("n"));
    m.def("isomorphic", &isomorphic);
}
