#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pivotkit/cli.hpp"
#include "pivotkit/cutrank.hpp"
#include "pivotkit/error.hpp"
#include "pivotkit/extremal.hpp"
#include "pivotkit/gf2.hpp"
#include "pivotkit/io.hpp"
#include "pivotkit/matroid.hpp"
#include "pivotkit/pivot.hpp"
#include "pivotkit/structure.hpp"
#include "pivotkit/verify.hpp"

namespace py = pybind11;
using namespace pivotkit;

namespace {

using Rows = std::vector<std::vector<int>>;

Graph graph_from_edges(std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }

std::pair<std::size_t, std::vector<Edge>> graph_to_edges(const Graph& g) { return {g.vertex_count(), g.edges()}; }

Rows matrix_rows(const BitMatrix& m) {
  Rows rows(m.nrows(), std::vector<int>(m.ncols(), 0));
  for (std::size_t i = 0; i < m.nrows(); ++i) {
    for (std::size_t j = 0; j < m.ncols(); ++j) rows[i][j] = m.get(i, j) ? 1 : 0;
  }
  return rows;
}

BinaryMatroid matroid_from(const std::vector<Element>& basis, const std::vector<Element>& cobasis, const Rows& rep) {
  BitMatrix m(basis.size(), cobasis.size());
  if (rep.size() != basis.size()) throw Error(ErrorCode::DimensionMismatch, "rep must have one row per basis element");
  for (std::size_t i = 0; i < rep.size(); ++i) {
    if (rep[i].size() != cobasis.size()) throw Error(ErrorCode::DimensionMismatch, "rep row length");
    for (std::size_t j = 0; j < rep[i].size(); ++j) m.set(i, j, rep[i][j] != 0);
  }
  return BinaryMatroid(basis, cobasis, std::move(m));
}

py::dict instance_dict(const Instance& inst) {
  py::dict d;
  std::vector<std::tuple<Element, std::size_t, std::size_t>> edges;
  for (const auto& e : inst.multigraph.edges) edges.emplace_back(e.label, e.u, e.v);
  d["n"] = inst.multigraph.n;
  d["edges"] = edges;
  d["tree"] = inst.tree.edges;
  d["fundamental"] = matrix_rows(inst.fundamental.biadjacency());
  d["text"] = to_text(inst, write_instance);
  return d;
}

}  // namespace

PYBIND11_MODULE(pivotkit, m) {
  m.doc() = "Fundamental graphs, pivots, cut-rank and binary matroids over GF(2)";

  py::register_exception<Error>(m, "Error");

  m.def("rank", [](const Rows& rows) { return rank(BitMatrix::from_rows(rows)); }, py::arg("rows"));

  m.def("pivot",
        [](std::size_t n, const std::vector<Edge>& edges, Vertex x, Vertex y) {
          return graph_to_edges(pivot(graph_from_edges(n, edges), x, y));
        },
        py::arg("n"), py::arg("edges"), py::arg("x"), py::arg("y"),
        "Pivot on edge xy; returns (n, edges).");

  m.def("cut_rank",
        [](std::size_t n, const std::vector<Edge>& edges, const VertexSet& x) {
          return cut_rank(graph_from_edges(n, edges), x);
        },
        py::arg("n"), py::arg("edges"), py::arg("x"));

  m.def("find_low_rank_separation",
        [](std::size_t n, const std::vector<Edge>& edges, std::size_t k) -> py::object {
          const auto sep = find_low_rank_separation(graph_from_edges(n, edges), k);
          if (!sep) return py::none();
          return py::make_tuple(sep->side_x, sep->order, sep->cutrank_value);
        },
        py::arg("n"), py::arg("edges"), py::arg("k"),
        "None when k-rank-connected, otherwise (side, order, cutrank).");

  m.def("are_isomorphic",
        [](std::size_t n1, const std::vector<Edge>& e1, std::size_t n2, const std::vector<Edge>& e2) {
          return are_isomorphic(graph_from_edges(n1, e1), graph_from_edges(n2, e2));
        });

  m.def("gen_ktt_example", [](std::size_t t) { return instance_dict(gen_ktt_example(t)); }, py::arg("t"));
  m.def("gen_c6_blowup_example", [](std::size_t s) { return instance_dict(gen_c6_blowup_example(s)); }, py::arg("s"));
  m.def("gen_random_instance",
        [](std::size_t n, std::size_t extra, std::uint64_t seed, bool loops) {
          return instance_dict(gen_random_instance(n, extra, seed, loops));
        },
        py::arg("n"), py::arg("extra"), py::arg("seed"), py::arg("allow_loops") = false);

  m.def("circuits",
        [](const std::vector<Element>& basis, const std::vector<Element>& cobasis, const Rows& rep) {
          return circuits(matroid_from(basis, cobasis, rep));
        },
        py::arg("basis"), py::arg("cobasis"), py::arg("rep"));
  m.def("matroid_lambda",
        [](const std::vector<Element>& basis, const std::vector<Element>& cobasis, const Rows& rep,
           const ElementSet& x) { return lambda(matroid_from(basis, cobasis, rep), x); },
        py::arg("basis"), py::arg("cobasis"), py::arg("rep"), py::arg("x"));

  m.def("split_tree",
        [](std::size_t n, const std::vector<Edge>& edges, std::size_t s) {
          return to_text(split_tree(graph_from_edges(n, edges), s), write_tree_split);
        },
        py::arg("n"), py::arg("edges"), py::arg("s"), "Split in the text format used by the CLI.");

  m.def("campaign_names", &campaign_names);
  m.def("run_campaign",
        [](const std::string& name, std::uint64_t seed, std::size_t trials) {
          CampaignParams p = default_params(name);
          if (trials > 0) p.trials = trials;
          const auto r = run_campaign(name, p, seed);
          std::ostringstream out;
          write_report(out, r);
          return py::make_tuple(r.passed(), out.str());
        },
        py::arg("name"), py::arg("seed") = 0, py::arg("trials") = 0,
        "Returns (passed, report text).");

  m.def("run_cli",
        [](const std::vector<std::string>& args, const std::string& input) {
          std::istringstream in(input);
          std::ostringstream out;
          std::ostringstream err;
          const int code = run_cli(args, in, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), py::arg("stdin") = "", "Returns (exit code, stdout, stderr).");
}
