#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hypercp/baselines.hpp"
#include "hypercp/eval.hpp"
#include "hypercp/generator.hpp"
#include "hypercp/hypergraph.hpp"
#include "hypercp/ingest.hpp"
#include "hypercp/solver.hpp"

namespace py = pybind11;
using namespace hypercp;

namespace {

SolverConfig make_config(double p, double q, const std::string& xi, double tol, int max_iter,
                         std::uint64_t seed) {
  SolverConfig cfg;
  cfg.p = p;
  cfg.q = q;
  cfg.xi = parse_xi_rule(xi);
  cfg.tol = tol;
  cfg.max_iter = max_iter;
  cfg.seed = seed;
  cfg.validate();
  return cfg;
}

std::optional<XiRule> optional_rule(const std::optional<std::string>& xi) {
  if (!xi) return std::nullopt;
  return parse_xi_rule(*xi);
}

}  // namespace

PYBIND11_MODULE(_hypercp, m) {
  m.doc() = "Core-periphery detection in hypergraphs";
  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init([](std::size_t n, const std::vector<std::vector<NodeId>>& edges,
                       const std::vector<double>& weights) { return Hypergraph::build(n, edges, weights); }),
           py::arg("n"), py::arg("edges"), py::arg("weights") = std::vector<double>{},
           "Build from node count and edge lists; duplicate edges merge with summed weights.")
      .def_property_readonly("num_nodes", &Hypergraph::num_nodes)
      .def_property_readonly("num_edges", &Hypergraph::num_edges)
      .def_property_readonly("weighted", &Hypergraph::weighted)
      .def("edges", &Hypergraph::edge_lists)
      .def("weights", [](const Hypergraph& h) {
        auto w = h.weights();
        return std::vector<double>(w.begin(), w.end());
      })
      .def("degree", &Hypergraph::degree)
      .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
      .def("__repr__", [](const Hypergraph& h) {
        return "<Hypergraph n=" + std::to_string(h.num_nodes()) + " m=" + std::to_string(h.num_edges()) + ">";
      });

  py::class_<WeightedGraph>(m, "WeightedGraph")
      .def(py::init([](std::size_t n, const std::vector<std::tuple<NodeId, NodeId, double>>& t) {
             return WeightedGraph::from_triples(n, t);
           }),
           py::arg("n"), py::arg("triples"))
      .def_property_readonly("num_nodes", &WeightedGraph::num_nodes)
      .def("at", &WeightedGraph::at)
      .def("triples", [](const WeightedGraph& g) {
        std::vector<std::tuple<NodeId, NodeId, double>> out;
        for (NodeId i = 0; i < g.num_nodes(); ++i)
          for (const auto& e : g.row(i))
            if (i < e.col) out.emplace_back(i, e.col, e.weight);
        return out;
      });

  py::class_<SolverResult>(m, "SolverResult")
      .def_readonly("scores", &SolverResult::scores)
      .def_readonly("eigenvalue", &SolverResult::eigenvalue)
      .def_readonly("iterations", &SolverResult::iterations)
      .def_readonly("converged", &SolverResult::converged)
      .def_readonly("residual_trace", &SolverResult::residual_trace)
      .def_readonly("contraction_trace", &SolverResult::contraction_trace)
      .def_readonly("isolated_nodes", &SolverResult::isolated_nodes);

  py::class_<PowerIterationResult>(m, "PowerIterationResult")
      .def_readonly("scores", &PowerIterationResult::scores)
      .def_readonly("iterations", &PowerIterationResult::iterations)
      .def_readonly("converged", &PowerIterationResult::converged)
      .def_readonly("residual_trace", &PowerIterationResult::residual_trace);

  py::class_<UmhsResult>(m, "UmhsResult")
      .def_readonly("hitting_set", &UmhsResult::hitting_set)
      .def_readonly("ranking", &UmhsResult::ranking)
      .def_readonly("best_restart", &UmhsResult::best_restart)
      .def_readonly("restart_sizes", &UmhsResult::restart_sizes)
      .def("scores", [](const UmhsResult& r) { return ranking_to_scores(r.ranking, r.ranking.size()); });

  m.def(
      "hypernsm",
      [](const Hypergraph& h, double p, double q, const std::string& xi, double tol, int max_iter,
         std::uint64_t seed) {
        auto cfg = make_config(p, q, xi, tol, max_iter, seed);
        py::gil_scoped_release release;
        return hypernsm(h, cfg);
      },
      py::arg("h"), py::arg("p") = 11.0, py::arg("q") = 10.0, py::arg("xi") = "reciprocal",
      py::arg("tol") = 1e-8, py::arg("max_iter") = 10000, py::arg("seed") = 0);

  m.def(
      "objective",
      [](const Hypergraph& h, const std::vector<double>& x, double q, const std::string& xi) {
        return objective(h, parse_xi_rule(xi), x, q);
      },
      py::arg("h"), py::arg("x"), py::arg("q") = 10.0, py::arg("xi") = "reciprocal");

  m.def(
      "apply_F",
      [](const Hypergraph& h, const std::vector<double>& x, double q, const std::string& xi) {
        return apply_F(h, parse_xi_rule(xi), x, q);
      },
      py::arg("h"), py::arg("x"), py::arg("q") = 10.0, py::arg("xi") = "reciprocal");

  m.def(
      "sample",
      [](std::size_t n, std::size_t max_size, double q_mu, const std::string& xi, std::uint64_t seed,
         const std::vector<std::uint32_t>& planted_ranks) {
        GeneratorConfig cfg;
        cfg.n = n;
        cfg.max_size = max_size;
        cfg.q_mu = q_mu;
        cfg.xi = parse_xi_rule(xi);
        cfg.seed = seed;
        cfg.planted_ranks = planted_ranks;
        auto s = sample(cfg);
        return py::make_tuple(s.graph, s.planted_ranks);
      },
      py::arg("n"), py::arg("max_size"), py::arg("q_mu") = 10.0, py::arg("xi") = "reciprocal",
      py::arg("seed") = 0, py::arg("planted_ranks") = std::vector<std::uint32_t>{},
      "Returns (hypergraph, 1-based planted rank of every observed node).");

  m.def(
      "mu_q",
      [](const std::vector<std::uint32_t>& ranks, std::size_t n, double q_mu) { return mu_q(ranks, n, q_mu); },
      py::arg("ranks"), py::arg("n"), py::arg("q_mu"));
  m.def(
      "edge_probability",
      [](const std::vector<std::uint32_t>& ranks, std::size_t n, double q_mu, const std::string& xi) {
        GeneratorConfig cfg;
        cfg.n = n;
        cfg.q_mu = q_mu;
        cfg.xi = parse_xi_rule(xi);
        return edge_probability(ranks, cfg);
      },
      py::arg("ranks"), py::arg("n"), py::arg("q_mu") = 10.0, py::arg("xi") = "reciprocal");
  m.def(
      "mle_objective",
      [](const Hypergraph& h, const std::vector<std::uint32_t>& ranks, double q_mu, const std::string& xi) {
        return mle_objective(h, ranks, parse_xi_rule(xi), q_mu);
      },
      py::arg("h"), py::arg("ranks"), py::arg("q_mu") = 10.0, py::arg("xi") = "reciprocal");

  m.def("clique_expansion", [](const Hypergraph& h) { return clique_expansion(h); }, py::arg("h"));
  m.def(
      "graph_nsm",
      [](const WeightedGraph& g, double p, double q, double tol, int max_iter, std::uint64_t seed) {
        auto cfg = make_config(p, q, "unit", tol, max_iter, seed);
        py::gil_scoped_release release;
        return graph_nsm(g, cfg);
      },
      py::arg("g"), py::arg("p") = 11.0, py::arg("q") = 10.0, py::arg("tol") = 1e-8,
      py::arg("max_iter") = 10000, py::arg("seed") = 0);
  m.def(
      "borgatti_everett",
      [](const WeightedGraph& g, double tol, int max_iter, std::uint64_t seed) {
        py::gil_scoped_release release;
        return borgatti_everett(g, tol, max_iter, seed);
      },
      py::arg("g"), py::arg("tol") = 1e-8, py::arg("max_iter") = 100000, py::arg("seed") = 0);
  m.def("umhs", &umhs, py::arg("h"), py::arg("restarts") = 5, py::arg("seed") = 0);

  m.def(
      "gamma",
      [](const Hypergraph& h, const std::vector<NodeId>& S, std::optional<std::string> xi) {
        return gamma(h, S, optional_rule(xi));
      },
      py::arg("h"), py::arg("S"), py::arg("xi") = py::none());
  m.def(
      "profile",
      [](const Hypergraph& h, const std::vector<double>& scores, std::optional<std::string> xi) {
        return profile(h, scores, optional_rule(xi)).values;
      },
      py::arg("h"), py::arg("scores"), py::arg("xi") = py::none(),
      "gamma(S_k) for the k lowest-scored nodes, k = 1..n.");
  m.def(
      "intersection_profile",
      [](const std::vector<double>& scores, const std::vector<NodeId>& core) {
        return intersection_profile(scores, core).values;
      },
      py::arg("scores"), py::arg("core"));
  m.def(
      "kendall_tau",
      [](const std::vector<double>& a, const std::vector<double>& b) { return kendall_tau(a, b); },
      py::arg("a"), py::arg("b"));

  m.def(
      "read_edge_list",
      [](const std::string& path) {
        auto lh = read_edge_list_file(path);
        return py::make_tuple(lh.graph, lh.labels);
      },
      py::arg("path"), "Returns (hypergraph, labels); gzip input is accepted.");
}
