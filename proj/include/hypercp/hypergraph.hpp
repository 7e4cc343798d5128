#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypercp {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Error raised for invalid inputs anywhere in the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// How a hyperedge's weight and size turn into its scaling factor xi(e).
enum class XiRule {
  Reciprocal,          // 1 / |e|
  WeightedReciprocal,  // w(e) / |e|
  Unit,                // w(e)
};

XiRule parse_xi_rule(const std::string& name);
std::string to_string(XiRule rule);

double xi_value(XiRule rule, double weight, std::size_t size);

// Immutable hypergraph with both incidence directions stored in CSR form:
// edge -> nodes (rows of B^T) and node -> edges (rows of B).
class Hypergraph {
 public:
  Hypergraph() = default;

  // Canonicalizes every edge (sort + dedup within the edge), merges exact
  // duplicate edges by summing their weights and builds both indexes. Edge
  // order follows first appearance. An empty `weights` means all ones.
  static Hypergraph build(std::size_t n,
                          const std::vector<std::vector<NodeId>>& edges,
                          const std::vector<double>& weights = {});

  std::size_t num_nodes() const { return n_; }
  std::size_t num_edges() const { return weights_.size(); }

  std::span<const NodeId> edge(EdgeId e) const {
    return {edge_nodes_.data() + edge_offsets_[e],
            edge_offsets_[e + 1] - edge_offsets_[e]};
  }
  std::size_t edge_size(EdgeId e) const { return edge_offsets_[e + 1] - edge_offsets_[e]; }
  double weight(EdgeId e) const { return weights_[e]; }
  std::span<const double> weights() const { return weights_; }

  std::span<const EdgeId> incident_edges(NodeId i) const {
    return {node_edges_.data() + node_offsets_[i],
            node_offsets_[i + 1] - node_offsets_[i]};
  }
  std::size_t degree(NodeId i) const { return node_offsets_[i + 1] - node_offsets_[i]; }
  bool isolated(NodeId i) const { return degree(i) == 0; }

  /// Sum of hyperedge sizes, i.e. the number of nonzeros of B.
  std::size_t degree_sum() const { return edge_nodes_.size(); }

  /// True when some weight differs from 1.
  bool weighted() const;

  std::vector<std::vector<NodeId>> edge_lists() const;

  bool operator==(const Hypergraph& other) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> edge_offsets_{0};
  std::vector<NodeId> edge_nodes_;
  std::vector<double> weights_;
  std::vector<std::size_t> node_offsets_{0};
  std::vector<EdgeId> node_edges_;
};

/// Per-edge xi(e) values.
std::vector<double> xi_vector(const Hypergraph& h, XiRule rule);

/// Reciprocal for unit-weight inputs, WeightedReciprocal otherwise.
XiRule default_xi_rule(const Hypergraph& h);

/// Hypergraph plus the dictionary mapping dense node ids to external labels.
struct LabeledHypergraph {
  Hypergraph graph;
  std::vector<std::string> labels;
};

}  // namespace hypercp
