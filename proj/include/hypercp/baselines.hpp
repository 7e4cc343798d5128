#pragma once

#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

#include "hypercp/hypergraph.hpp"
#include "hypercp/solver.hpp"

namespace hypercp {

// Symmetric nonnegative weighted graph in CSR form. Both triangles are
// stored; the diagonal is always empty and every stored weight is > 0.
class WeightedGraph {
 public:
  struct Entry {
    NodeId col;
    double weight;
  };

  WeightedGraph() = default;

  // Accumulates (i, j, w) triples for i != j into a symmetric matrix; repeated
  // pairs sum. Throws on self-loops, bad indices or non-positive weights.
  static WeightedGraph from_triples(std::size_t n,
                                    const std::vector<std::tuple<NodeId, NodeId, double>>& triples);

  std::size_t num_nodes() const { return n_; }
  /// Number of stored (directed) nonzeros, i.e. twice the undirected pair count.
  std::size_t nnz() const { return cols_.size(); }

  std::span<const Entry> row(NodeId i) const {
    return {cols_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  /// Entry (i, j), zero when absent.
  double at(NodeId i, NodeId j) const;

  std::vector<double> multiply(std::span<const double> x) const;

  /// Edge list view as a 2-uniform hypergraph: one edge per pair i < j
  /// with weight A_ij.
  Hypergraph as_hypergraph() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Entry> cols_;
};

/// A_ij = sum of w(e) over edges containing both i and j (i != j).
/// Throws when sum_e C(|e|, 2) exceeds `pair_budget`.
WeightedGraph clique_expansion(const Hypergraph& h, std::uint64_t pair_budget = 500'000'000);

/// Nonlinear spectral method on a graph; cfg.xi is ignored (the pairwise
/// objective weights each pair by A_ij).
SolverResult graph_nsm(const WeightedGraph& g, const SolverConfig& cfg);

struct PowerIterationResult {
  CoreScore scores;  // nonnegative, unit 2-norm
  int iterations = 0;
  bool converged = false;
  std::vector<double> residual_trace;
};

// Dominant eigenvector of A by power iteration on A + c I, where c is the
// mean weighted degree; the shift keeps bipartite spectra from oscillating
// and scales with the weights.
PowerIterationResult borgatti_everett(const WeightedGraph& g, double tol = 1e-8,
                                      int max_iter = 100000, std::uint64_t seed = 0);

struct UmhsResult {
  std::vector<NodeId> hitting_set;  // selected run, in insertion order
  std::vector<NodeId> ranking;      // most core first
  std::size_t best_restart = 0;
  std::vector<std::size_t> restart_sizes;
};

// Greedy hitting set over a random edge order followed by reverse-order
// pruning to a minimal hitting set; the smallest set across restarts wins.
UmhsResult umhs(const Hypergraph& h, int restarts = 5, std::uint64_t seed = 0);

/// True if every edge contains at least one node of `set`.
bool is_hitting_set(const Hypergraph& h, std::span<const NodeId> set);

/// Turns a most-core-first ranking into a score vector (first gets n, last gets 1).
CoreScore ranking_to_scores(std::span<const NodeId> ranking, std::size_t n);

}  // namespace hypercp
