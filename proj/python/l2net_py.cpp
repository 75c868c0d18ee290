// Python bindings. Networks and matrices are exposed as objects with text
// round-tripping; library errors surface as l2net.L2NetError with `.kind`.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "l2net/altpath.hpp"
#include "l2net/blobs.hpp"
#include "l2net/errors.hpp"
#include "l2net/metrics.hpp"
#include "l2net/pendant.hpp"
#include "l2net/reconstruct.hpp"
#include "l2net/splits.hpp"
#include "l2net/testkit.hpp"

namespace py = pybind11;
using namespace l2net;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Level-2 phylogenetic networks from shortest and longest distances";

  static py::exception<Error> l2net_error(m, "L2NetError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = py::reinterpret_borrow<py::object>(l2net_error.ptr())(e.what());
      err.attr("kind") = e.kind();
      PyErr_SetObject(l2net_error.ptr(), err.ptr());
    }
  });

  py::class_<Network>(m, "Network")
      .def_static("parse", &parse_network, py::arg("text"))
      .def("format", &format_network)
      .def("dot", &to_dot)
      .def("taxa", &Network::taxa)
      .def("vertex_count", &Network::vertex_count)
      .def("edge_count", &Network::edge_count)
      .def("edges", [](const Network& n) {
        std::vector<std::pair<VertexId, VertexId>> out;
        for (const Edge& e : n.edges()) out.emplace_back(e.u, e.v);
        return out;
      })
      .def("is_valid", &is_valid)
      .def("level", &level)
      .def("canonical_form", &canonical_form)
      .def("__str__", &format_network);

  py::class_<DistanceMatrix>(m, "DistanceMatrix")
      .def_static("parse", &parse_matrix, py::arg("text"))
      .def("format", &format_matrix)
      .def("taxa", &DistanceMatrix::taxa)
      .def("has_longest", &DistanceMatrix::has_longest)
      .def("shortest", py::overload_cast<const std::string&, const std::string&>(&DistanceMatrix::shortest, py::const_))
      .def("longest", py::overload_cast<const std::string&, const std::string&>(&DistanceMatrix::longest, py::const_))
      .def("shortest_only", &DistanceMatrix::shortest_only)
      .def("__eq__", &DistanceMatrix::operator==)
      .def("__len__", &DistanceMatrix::size)
      .def("__str__", &format_matrix);

  m.def("sl_matrix", &sl_matrix, py::arg("network"));
  m.def("shortest_matrix", &shortest_matrix, py::arg("network"));
  m.def("is_isomorphic", &is_isomorphic, py::arg("a"), py::arg("b"));

  py::class_<ReconstructionResult>(m, "ReconstructionResult")
      .def_property_readonly("outcome", [](const ReconstructionResult& r) { return outcome_name(r.outcome); })
      .def_readonly("networks", &ReconstructionResult::networks)
      .def_readonly("reason", &ReconstructionResult::reason)
      .def_property_readonly("trace", [](const ReconstructionResult& r) {
        std::vector<std::string> out;
        for (const auto& s : r.trace) out.push_back(s.to_string());
        return out;
      });

  m.def("reconstruct_sl", &reconstruct_sl, py::arg("matrix"));
  m.def("reconstruct_shortest", &reconstruct_shortest, py::arg("matrix"), py::arg("branch_cap") = 4096);
  m.def("reconstruct_genside", &reconstruct_genside, py::arg("matrix"));

  m.def(
      "all_splits",
      [](const DistanceMatrix& mat) {
        std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> out;
        for (const Split& s : all_splits(mat)) out.emplace_back(s.a, s.b);
        return out;
      },
      py::arg("matrix"));
  m.def(
      "cut_edge_splits",
      [](const Network& net) {
        std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> out;
        for (const Split& s : cut_edge_splits(net)) out.emplace_back(s.a, s.b);
        return out;
      },
      py::arg("network"));
  m.def(
      "identify_pendant",
      [](const DistanceMatrix& mat, const std::vector<std::string>& part) {
        return identify_pendant(mat, part).to_string();
      },
      py::arg("matrix"), py::arg("part"));

  m.def(
      "altpath_pair",
      [](const std::string& tree_text) {
        ColoredTree t = parse_colored_tree(tree_text);
        return std::make_pair(build_altpath(t), build_altpath(similar(t)));
      },
      py::arg("tree_text"), "The two similar alt-path networks of a coloured tree.");
  m.def(
      "detect_altpath",
      [](const Network& net) -> std::optional<std::string> {
        auto emb = detect_altpath(net);
        if (!emb) return std::nullopt;
        return format_colored_tree(emb->tree);
      },
      py::arg("network"), "Coloured tree of a contained alt-path structure, or None.");
  m.def("is_shortest_reconstructible", &is_shortest_reconstructible, py::arg("network"));

  m.def(
      "random_network",
      [](std::uint64_t seed, int min_leaves, int max_leaves, int max_blobs, bool allow_bad_blobs, bool genside,
         int max_level) {
        GenParams p;
        p.seed = seed;
        p.min_leaves = min_leaves;
        p.max_leaves = max_leaves;
        p.max_blobs = max_blobs;
        p.allow_bad_blobs = allow_bad_blobs;
        p.require_leaf_every_side = genside;
        p.max_level = max_level;
        return random_network(p);
      },
      py::arg("seed"), py::arg("min_leaves") = 5, py::arg("max_leaves") = 20, py::arg("max_blobs") = 4,
      py::arg("allow_bad_blobs") = true, py::arg("genside") = false, py::arg("max_level") = 3);
  m.def(
      "verify_roundtrip",
      [](const Network& net, const std::string& mode) {
        RoundTripReport r = verify_roundtrip(net, parse_mode(mode));
        return py::make_tuple(r.pass, outcome_name(r.outcome), r.message);
      },
      py::arg("network"), py::arg("mode") = "sl");

  m.attr("__all__") = py::make_tuple(
      "L2NetError", "Network", "DistanceMatrix", "ReconstructionResult", "sl_matrix", "shortest_matrix",
      "is_isomorphic", "reconstruct_sl", "reconstruct_shortest", "reconstruct_genside", "all_splits",
      "cut_edge_splits", "identify_pendant", "altpath_pair", "detect_altpath", "is_shortest_reconstructible",
      "random_network", "verify_roundtrip");
}
