#include "hypercp/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace hypercp {

XiRule parse_xi_rule(const std::string& name) {
  if (name == "reciprocal") return XiRule::Reciprocal;
  if (name == "weighted") return XiRule::WeightedReciprocal;
  if (name == "unit") return XiRule::Unit;
  throw Error("unknown xi rule '" + name + "' (expected reciprocal, weighted or unit)");
}

std::string to_string(XiRule rule) {
  switch (rule) {
    case XiRule::Reciprocal: return "reciprocal";
    case XiRule::WeightedReciprocal: return "weighted";
    case XiRule::Unit: return "unit";
  }
  return "?";
}

double xi_value(XiRule rule, double weight, std::size_t size) {
  switch (rule) {
    case XiRule::Reciprocal: return 1.0 / static_cast<double>(size);
    case XiRule::WeightedReciprocal: return weight / static_cast<double>(size);
    case XiRule::Unit: return weight;
  }
  return 0.0;
}

Hypergraph Hypergraph::build(std::size_t n,
                             const std::vector<std::vector<NodeId>>& edges,
                             const std::vector<double>& weights) {
  if (n == 0) throw Error("hypergraph must have at least one node");
  if (!weights.empty() && weights.size() != edges.size())
    throw Error("weights length " + std::to_string(weights.size()) +
                " does not match edge count " + std::to_string(edges.size()));

  Hypergraph h;
  h.n_ = n;

  // canonical edge -> position in output
  std::map<std::vector<NodeId>, std::size_t> seen;
  std::vector<std::vector<NodeId>> canon;

  for (std::size_t k = 0; k < edges.size(); ++k) {
    double w = weights.empty() ? 1.0 : weights[k];
    if (!(w > 0.0) || !std::isfinite(w))
      throw Error("edge " + std::to_string(k) + " has non-positive or non-finite weight");
    std::vector<NodeId> e = edges[k];
    for (NodeId v : e)
      if (v >= n)
        throw Error("edge " + std::to_string(k) + ": node index " + std::to_string(v) +
                    " out of range [0, " + std::to_string(n) + ")");
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.size() < 2)
      throw Error("edge " + std::to_string(k) + " has fewer than 2 distinct nodes");

    auto [it, inserted] = seen.try_emplace(e, canon.size());
    if (inserted) {
      canon.push_back(std::move(e));
      h.weights_.push_back(w);
    } else {
      h.weights_[it->second] += w;
    }
  }

  h.edge_offsets_.reserve(canon.size() + 1);
  std::vector<std::size_t> deg(n, 0);
  for (const auto& e : canon) {
    h.edge_nodes_.insert(h.edge_nodes_.end(), e.begin(), e.end());
    h.edge_offsets_.push_back(h.edge_nodes_.size());
    for (NodeId v : e) ++deg[v];
  }

  h.node_offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) h.node_offsets_[i + 1] = h.node_offsets_[i] + deg[i];
  h.node_edges_.resize(h.edge_nodes_.size());
  std::vector<std::size_t> cursor(h.node_offsets_.begin(), h.node_offsets_.end() - 1);
  for (EdgeId e = 0; e < canon.size(); ++e)
    for (NodeId v : canon[e]) h.node_edges_[cursor[v]++] = e;

  return h;
}

bool Hypergraph::weighted() const {
  return std::any_of(weights_.begin(), weights_.end(), [](double w) { return w != 1.0; });
}

std::vector<std::vector<NodeId>> Hypergraph::edge_lists() const {
  std::vector<std::vector<NodeId>> out;
  out.reserve(num_edges());
  for (EdgeId e = 0; e < num_edges(); ++e) {
    auto span = edge(e);
    out.emplace_back(span.begin(), span.end());
  }
  return out;
}

std::vector<double> xi_vector(const Hypergraph& h, XiRule rule) {
  std::vector<double> xi(h.num_edges());
  for (EdgeId e = 0; e < h.num_edges(); ++e) xi[e] = xi_value(rule, h.weight(e), h.edge_size(e));
  return xi;
}

XiRule default_xi_rule(const Hypergraph& h) {
  return h.weighted() ? XiRule::WeightedReciprocal : XiRule::Reciprocal;
}

}  // namespace hypercp
