#include "hypercp/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "hypercp/numeric.hpp"

namespace hypercp {

std::vector<NodeId> ascending_order(std::span<const double> scores) {
  std::vector<NodeId> order(scores.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return scores[a] < scores[b]; });
  return order;
}

std::vector<NodeId> descending_order(std::span<const double> scores) {
  std::vector<NodeId> order(scores.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return scores[a] > scores[b]; });
  return order;
}

namespace {

std::vector<double> edge_weights(const Hypergraph& h, std::optional<XiRule> xi) {
  if (xi) return xi_vector(h, *xi);
  return std::vector<double>(h.num_edges(), 1.0);
}

}  // namespace

double gamma(const Hypergraph& h, std::span<const NodeId> S, std::optional<XiRule> xi) {
  std::vector<bool> in(h.num_nodes(), false);
  for (NodeId v : S) {
    if (v >= h.num_nodes()) throw Error("gamma: node index out of range");
    in[v] = true;
  }
  const auto w = edge_weights(h, xi);
  double contained = 0.0, touched = 0.0;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    std::size_t inside = 0;
    for (NodeId v : h.edge(e)) inside += in[v];
    if (inside > 0) touched += w[e];
    if (inside == h.edge_size(e)) contained += w[e];
  }
  return touched > 0.0 ? contained / touched : 0.0;
}

ProfileCurve profile(const Hypergraph& h, std::span<const double> scores,
                     std::optional<XiRule> xi, std::string label) {
  if (scores.size() != h.num_nodes()) throw Error("profile: score length does not match node count");
  const auto w = edge_weights(h, xi);
  ProfileCurve curve{{}, ProfileKind::Profile, std::move(label)};
  curve.values.reserve(h.num_nodes());

  std::vector<std::size_t> inside(h.num_edges(), 0);
  double contained = 0.0, touched = 0.0;
  for (NodeId v : ascending_order(scores)) {
    for (EdgeId e : h.incident_edges(v)) {
      if (inside[e]++ == 0) touched += w[e];
      if (inside[e] == h.edge_size(e)) contained += w[e];
    }
    curve.values.push_back(touched > 0.0 ? contained / touched : 0.0);
  }
  return curve;
}

ProfileCurve intersection_profile(std::span<const double> scores, std::span<const NodeId> core,
                                  std::string label) {
  if (core.empty()) throw Error("intersection_profile: planted core is empty");
  std::vector<bool> in(scores.size(), false);
  for (NodeId v : core) {
    if (v >= scores.size()) throw Error("intersection_profile: core node out of range");
    in[v] = true;
  }
  ProfileCurve curve{{}, ProfileKind::Intersection, std::move(label)};
  curve.values.reserve(scores.size());
  std::size_t hits = 0, k = 0;
  for (NodeId v : descending_order(scores)) {
    hits += in[v];
    ++k;
    curve.values.push_back(static_cast<double>(hits) / static_cast<double>(k));
  }
  return curve;
}

std::vector<Coordinate> permuted_coordinates(const WeightedGraph& g,
                                             std::span<const double> scores) {
  if (scores.size() != g.num_nodes())
    throw Error("permuted_coordinates: score length does not match node count");
  std::vector<NodeId> rank(scores.size());
  auto order = descending_order(scores);
  for (std::size_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = static_cast<NodeId>(pos);

  std::vector<Coordinate> out;
  out.reserve(g.nnz());
  for (NodeId i = 0; i < g.num_nodes(); ++i)
    for (const auto& e : g.row(i)) out.push_back({rank[i], rank[e.col], e.weight});
  std::sort(out.begin(), out.end(), [](const Coordinate& a, const Coordinate& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  return out;
}

double kendall_tau(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error("kendall_tau: length mismatch");
  long long concordant = 0, discordant = 0, ties_a = 0, ties_b = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      double da = a[i] - a[j], db = b[i] - b[j];
      if (da == 0.0 && db == 0.0) continue;
      if (da == 0.0) {
        ++ties_a;
      } else if (db == 0.0) {
        ++ties_b;
      } else if ((da > 0.0) == (db > 0.0)) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  double n1 = static_cast<double>(concordant + discordant + ties_a);
  double n2 = static_cast<double>(concordant + discordant + ties_b);
  if (n1 == 0.0 || n2 == 0.0) return 0.0;
  return static_cast<double>(concordant - discordant) / std::sqrt(n1 * n2);
}

void write_profile_csv(std::ostream& os, std::span<const ProfileCurve> curves) {
  const bool iota = !curves.empty() && curves.front().kind == ProfileKind::Intersection;
  os << "k," << (iota ? "iota" : "gamma") << ",method\n";
  for (const auto& c : curves) {
    if (c.kind != curves.front().kind) throw Error("cannot mix profile kinds in one CSV");
    for (std::size_t k = 0; k < c.values.size(); ++k)
      os << (k + 1) << ',' << format_double(c.values[k]) << ',' << c.method_label << '\n';
  }
}

void write_coordinates(std::ostream& os, std::span<const Coordinate> coords) {
  for (const auto& c : coords) os << c.row << ' ' << c.col << ' ' << format_double(c.weight) << '\n';
}

}  // namespace hypercp
