#include "hypercp/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace hypercp {

void check_ranks(std::span<const std::uint32_t> ranks, std::size_t n) {
  if (ranks.size() != n)
    throw Error("permutation has length " + std::to_string(ranks.size()) + ", expected " +
                std::to_string(n));
  std::vector<bool> hit(n + 1, false);
  for (auto r : ranks) {
    if (r < 1 || r > n || hit[r]) throw Error("invalid permutation: not a bijection on {1..n}");
    hit[r] = true;
  }
}

void GeneratorConfig::validate() const {
  if (max_size < 2 || max_size > n)
    throw Error("max_size must satisfy 2 <= max_size <= n");
  if (!(q_mu >= 1.0)) throw Error("q_mu must be >= 1");
  if (!planted_ranks.empty()) check_ranks(planted_ranks, n);
}

double mu_q(std::span<const std::uint32_t> ranks, std::size_t n, double q_mu) {
  const double dn = static_cast<double>(n);
  double m = 0.0;
  for (auto r : ranks) {
    if (r < 1 || r > n) throw Error("rank " + std::to_string(r) + " out of range");
    m = std::max(m, (dn - r) / dn);
  }
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (auto r : ranks) s += std::pow(((dn - r) / dn) / m, q_mu);
  return m * std::pow(s, 1.0 / q_mu);
}

double sigmoid(double t) {
  if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
  double z = std::exp(t);
  return z / (1.0 + z);
}

double edge_probability(std::span<const std::uint32_t> ranks, const GeneratorConfig& cfg) {
  return sigmoid(xi_value(cfg.xi, 1.0, ranks.size()) * mu_q(ranks, cfg.n, cfg.q_mu));
}

std::uint64_t candidate_count(std::size_t n, std::size_t max_size) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  for (std::size_t r = 2; r <= max_size && r <= n; ++r) {
    // C(n, r) built incrementally; C(n,k) * (n-k) / (k+1) stays integral.
    long double c = 1.0L;
    for (std::size_t k = 0; k < r; ++k) c = c * (n - k) / (k + 1);
    if (c >= static_cast<long double>(kMax - total)) return kMax;
    total += static_cast<std::uint64_t>(std::llround(c));
  }
  return total;
}

PlantedSample sample(const GeneratorConfig& cfg) {
  cfg.validate();
  std::uint64_t count = candidate_count(cfg.n, cfg.max_size);
  if (count > cfg.budget)
    throw Error("candidate subset count " + std::to_string(count) + " exceeds budget " +
                std::to_string(cfg.budget));

  std::vector<std::uint32_t> ranks = cfg.planted_ranks;
  if (ranks.empty()) {
    ranks.resize(cfg.n);
    std::iota(ranks.begin(), ranks.end(), 1u);
  }

  std::mt19937_64 rng(cfg.seed);
  std::vector<NodeId> observed(cfg.n);
  std::iota(observed.begin(), observed.end(), 0u);
  std::shuffle(observed.begin(), observed.end(), rng);

  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::vector<NodeId>> edges;
  std::vector<std::uint32_t> edge_ranks;
  for_each_candidate(cfg.n, cfg.max_size, [&](std::span<const NodeId> e) {
    edge_ranks.resize(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) edge_ranks[k] = ranks[e[k]];
    if (coin(rng) < edge_probability(edge_ranks, cfg)) {
      std::vector<NodeId> obs(e.size());
      for (std::size_t k = 0; k < e.size(); ++k) obs[k] = observed[e[k]];
      edges.push_back(std::move(obs));
    }
  });

  PlantedSample out;
  out.graph = Hypergraph::build(cfg.n, edges);
  out.planted_ranks.resize(cfg.n);
  for (std::size_t j = 0; j < cfg.n; ++j) out.planted_ranks[observed[j]] = ranks[j];
  out.observed_of_model = std::move(observed);
  return out;
}

double mle_objective(const Hypergraph& h, std::span<const std::uint32_t> ranks, XiRule xi,
                     double q_mu) {
  check_ranks(ranks, h.num_nodes());
  double total = 0.0;
  std::vector<std::uint32_t> er;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    er.clear();
    for (NodeId v : h.edge(e)) er.push_back(ranks[v]);
    total += xi_value(xi, h.weight(e), h.edge_size(e)) * mu_q(er, h.num_nodes(), q_mu);
  }
  return total;
}

}  // namespace hypercp
