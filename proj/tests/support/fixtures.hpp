#pragma once

// Shared test inputs: the hypercycle and seeded random hypergraphs/graphs.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "hypercp/baselines.hpp"
#include "hypercp/hypergraph.hpp"

namespace hypercp::testing {

struct Hypercycle {
  Hypergraph graph;
  std::vector<NodeId> overlap;     // the 5 nodes shared by consecutive edges
  std::vector<NodeId> big_edge;    // the 15 nodes of the largest edge
};

// Five hyperedges of sizes 3, 4, 5, 6, 15 arranged in a cycle, consecutive
// edges sharing exactly one node: 28 nodes, 5 of degree 2.
inline Hypercycle make_hypercycle() {
  const std::vector<std::size_t> sizes{3, 4, 5, 6, 15};
  Hypercycle hc;
  for (NodeId k = 0; k < 5; ++k) hc.overlap.push_back(k);
  std::vector<std::vector<NodeId>> edges;
  NodeId next = 5;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    std::vector<NodeId> e{static_cast<NodeId>((k + 4) % 5), static_cast<NodeId>(k)};
    for (std::size_t j = 2; j < sizes[k]; ++j) e.push_back(next++);
    edges.push_back(e);
  }
  hc.graph = Hypergraph::build(next, edges);
  hc.big_edge = edges.back();
  std::sort(hc.big_edge.begin(), hc.big_edge.end());
  return hc;
}

// Random hypergraph with m edges whose sizes are uniform in [min_size,
// max_size]. With `cover`, a chain of 2-edges links every node so the
// hypergraph is connected and has no isolated node.
inline Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t min_size,
                                    std::size_t max_size, std::uint64_t seed, bool cover = true,
                                    bool random_weights = false) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size_dist(min_size, max_size);
  std::uniform_real_distribution<double> wdist(0.5, 3.0);
  std::vector<std::vector<NodeId>> edges;
  std::vector<double> weights;
  std::vector<NodeId> nodes(n);
  std::iota(nodes.begin(), nodes.end(), 0u);
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t s = std::min(size_dist(rng), n);
    std::shuffle(nodes.begin(), nodes.end(), rng);
    edges.emplace_back(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(s));
    weights.push_back(random_weights ? wdist(rng) : 1.0);
  }
  if (cover)
    for (NodeId i = 0; i + 1 < n; ++i) {
      edges.push_back({i, i + 1});
      weights.push_back(random_weights ? wdist(rng) : 1.0);
    }
  return Hypergraph::build(n, edges, weights);
}

// Random weighted simple graph as (i, j, w) triples with i < j.
inline std::vector<std::tuple<NodeId, NodeId, double>> random_graph_triples(
    std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0), wdist(0.5, 4.0);
  std::vector<std::tuple<NodeId, NodeId, double>> t;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (j == i + 1 || u(rng) < density) t.emplace_back(i, j, wdist(rng));
  return t;
}

inline WeightedGraph star_graph(std::size_t leaves) {
  std::vector<std::tuple<NodeId, NodeId, double>> t;
  for (NodeId i = 1; i <= leaves; ++i) t.emplace_back(0, i, 1.0);
  return WeightedGraph::from_triples(leaves + 1, t);
}

}  // namespace hypercp::testing
