#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "hypercp/baselines.hpp"
#include "hypercp/hypergraph.hpp"
#include "hypercp/solver.hpp"

namespace hypercp {

enum class ProfileKind { Profile, Intersection };

struct ProfileCurve {
  std::vector<double> values;  // values[k-1] for k = 1..n
  ProfileKind kind = ProfileKind::Profile;
  std::string method_label;
};

/// Node ids sorted by ascending score, ties by ascending index.
std::vector<NodeId> ascending_order(std::span<const double> scores);
/// Node ids sorted by descending score, ties by ascending index.
std::vector<NodeId> descending_order(std::span<const double> scores);

// (weight of edges contained in S) / (weight of edges touching S), where an
// edge weighs xi(e) if a rule is given and 1 otherwise. Returns 0 when S
// touches no edge.
double gamma(const Hypergraph& h, std::span<const NodeId> S, std::optional<XiRule> xi = {});

// gamma(S_k) for S_k the k lowest-scored nodes, k = 1..n, grown
// incrementally in O(sum |e| + n log n).
ProfileCurve profile(const Hypergraph& h, std::span<const double> scores,
                     std::optional<XiRule> xi = {}, std::string label = {});

// |top_k ∩ core| / k for k = 1..n.
ProfileCurve intersection_profile(std::span<const double> scores, std::span<const NodeId> core,
                                  std::string label = {});

struct Coordinate {
  NodeId row;
  NodeId col;
  double weight;
  bool operator==(const Coordinate&) const = default;
};

// Nonzeros of A with both indices replaced by their descending-score rank,
// sorted by (row, col).
std::vector<Coordinate> permuted_coordinates(const WeightedGraph& g,
                                             std::span<const double> scores);

/// Kendall tau-b rank correlation.
double kendall_tau(std::span<const double> a, std::span<const double> b);

// CSV with header "k,<gamma|iota>,method", one row per k per curve.
void write_profile_csv(std::ostream& os, std::span<const ProfileCurve> curves);
void write_coordinates(std::ostream& os, std::span<const Coordinate> coords);

}  // namespace hypercp
