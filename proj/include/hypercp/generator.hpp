#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hypercp/hypergraph.hpp"

namespace hypercp {

// Logistic core-periphery random hypergraph model: every candidate subset e
// with 2 <= |e| <= max_size appears independently with probability
// sigma(xi(e) * mu_q(e)), where mu_q is computed from the planted ranks of
// the nodes in e (rank 1 = most core).
struct GeneratorConfig {
  std::size_t n = 10;
  std::size_t max_size = 10;
  double q_mu = 10.0;
  XiRule xi = XiRule::Reciprocal;  // weights are 1 during generation
  std::uint64_t seed = 0;
  // planted_ranks[j] is the 1-based rank of model node j; empty = identity.
  std::vector<std::uint32_t> planted_ranks;
  // Upper bound on the number of enumerated candidate subsets.
  std::uint64_t budget = 10'000'000;

  void validate() const;
};

struct PlantedSample {
  Hypergraph graph;
  // 1-based planted rank of every observed node.
  std::vector<std::uint32_t> planted_ranks;
  // observed_of_model[j] is the observed label of model node j.
  std::vector<NodeId> observed_of_model;
};

/// (sum_{i in ranks} ((n - i)/n)^q)^(1/q) for 1-based ranks.
double mu_q(std::span<const std::uint32_t> ranks, std::size_t n, double q_mu);

double sigmoid(double t);

/// sigma(xi(e) mu_q(e)) for an edge given by the 1-based ranks of its nodes.
double edge_probability(std::span<const std::uint32_t> ranks, const GeneratorConfig& cfg);

/// Number of subsets with 2 <= size <= max_size, saturating at UINT64_MAX.
std::uint64_t candidate_count(std::size_t n, std::size_t max_size);

// Visits every candidate subset of {0..n-1} with sizes 2..max_size, grouped
// by size and lexicographic within a size block.
template <class Visitor>
void for_each_candidate(std::size_t n, std::size_t max_size, Visitor&& visit) {
  std::vector<NodeId> comb;
  for (std::size_t r = 2; r <= max_size && r <= n; ++r) {
    comb.resize(r);
    for (std::size_t i = 0; i < r; ++i) comb[i] = static_cast<NodeId>(i);
    while (true) {
      visit(std::span<const NodeId>(comb));
      std::size_t i = r;
      while (i > 0 && comb[i - 1] == n - r + i - 1) --i;
      if (i == 0) break;
      ++comb[i - 1];
      for (std::size_t j = i; j < r; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
}

/// Exact enumerate-and-flip sampler. Node labels are shuffled with the seed
/// so the planted order is not visible from the indices.
PlantedSample sample(const GeneratorConfig& cfg);

/// sum over edges of xi(e) * mu_q(e) with ranks[i] the 1-based rank of node i.
double mle_objective(const Hypergraph& h, std::span<const std::uint32_t> ranks, XiRule xi,
                     double q_mu);

/// Throws unless `ranks` is a bijection onto {1..n}.
void check_ranks(std::span<const std::uint32_t> ranks, std::size_t n);

}  // namespace hypercp
