#include "hypercp/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <tuple>

#include "hypercp/numeric.hpp"

namespace hypercp {

WeightedGraph WeightedGraph::from_triples(
    std::size_t n, const std::vector<std::tuple<NodeId, NodeId, double>>& triples) {
  WeightedGraph g;
  g.n_ = n;
  // Sum each unordered pair once, in input order, then mirror it so the
  // stored matrix is exactly symmetric.
  std::vector<std::tuple<NodeId, NodeId, double>> upper;
  upper.reserve(triples.size());
  for (const auto& [i, j, w] : triples) {
    if (i >= n || j >= n) throw Error("graph entry index out of range");
    if (i == j) throw Error("graph entry on the diagonal");
    if (!(w > 0.0) || !std::isfinite(w)) throw Error("graph weight must be positive and finite");
    upper.emplace_back(std::min(i, j), std::max(i, j), w);
  }
  auto by_pair = [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  };
  std::stable_sort(upper.begin(), upper.end(), by_pair);
  std::vector<std::tuple<NodeId, NodeId, double>> both;
  both.reserve(2 * upper.size());
  for (std::size_t k = 0; k < upper.size();) {
    auto [i, j, w] = upper[k];
    double acc = 0.0;
    for (; k < upper.size() && std::get<0>(upper[k]) == i && std::get<1>(upper[k]) == j; ++k)
      acc += std::get<2>(upper[k]);
    both.emplace_back(i, j, acc);
    both.emplace_back(j, i, acc);
  }
  std::sort(both.begin(), both.end(), by_pair);

  g.offsets_.assign(n + 1, 0);
  for (const auto& [i, j, w] : both) {
    g.cols_.push_back({j, w});
    ++g.offsets_[i + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  return g;
}

double WeightedGraph::at(NodeId i, NodeId j) const {
  auto r = row(i);
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const Entry& e, NodeId c) { return e.col < c; });
  return (it != r.end() && it->col == j) ? it->weight : 0.0;
}

std::vector<double> WeightedGraph::multiply(std::span<const double> x) const {
  std::vector<double> y(n_, 0.0);
  for (NodeId i = 0; i < n_; ++i) {
    double acc = 0.0;
    for (const auto& e : row(i)) acc += e.weight * x[e.col];
    y[i] = acc;
  }
  return y;
}

Hypergraph WeightedGraph::as_hypergraph() const {
  std::vector<std::vector<NodeId>> edges;
  std::vector<double> weights;
  for (NodeId i = 0; i < n_; ++i)
    for (const auto& e : row(i))
      if (i < e.col) {
        edges.push_back({i, e.col});
        weights.push_back(e.weight);
      }
  return Hypergraph::build(n_, edges, weights);
}

WeightedGraph clique_expansion(const Hypergraph& h, std::uint64_t pair_budget) {
  std::uint64_t pairs = 0;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    std::uint64_t s = h.edge_size(e);
    pairs += s * (s - 1) / 2;
  }
  if (pairs > pair_budget)
    throw Error("clique expansion needs " + std::to_string(pairs) + " pairs, budget is " +
                std::to_string(pair_budget));

  std::vector<std::tuple<NodeId, NodeId, double>> triples;
  triples.reserve(pairs);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto nodes = h.edge(e);
    for (std::size_t a = 0; a < nodes.size(); ++a)
      for (std::size_t b = a + 1; b < nodes.size(); ++b)
        triples.emplace_back(nodes[a], nodes[b], h.weight(e));
  }
  return WeightedGraph::from_triples(h.num_nodes(), triples);
}

SolverResult graph_nsm(const WeightedGraph& g, const SolverConfig& cfg) {
  SolverConfig pairwise = cfg;
  pairwise.xi = XiRule::Unit;
  return hypernsm(g.as_hypergraph(), pairwise);
}

PowerIterationResult borgatti_everett(const WeightedGraph& g, double tol, int max_iter,
                                      std::uint64_t seed) {
  const std::size_t n = g.num_nodes();
  if (n == 0 || g.nnz() == 0) throw Error("borgatti_everett: graph has no edges");
  if (!(tol > 0.0) || max_iter <= 0) throw Error("borgatti_everett: invalid tol or max_iter");

  double total = 0.0;
  for (NodeId i = 0; i < n; ++i)
    for (const auto& e : g.row(i)) total += e.weight;
  const double shift = total / static_cast<double>(n);

  PowerIterationResult res;
  std::vector<double> x(n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> start(0.5, 1.5);
  for (double& v : x) v = start(rng);
  double nrm = l2_norm(x);
  for (double& v : x) v /= nrm;

  std::vector<double> diff(n);
  for (int k = 1; k <= max_iter; ++k) {
    std::vector<double> y = g.multiply(x);
    for (std::size_t i = 0; i < n; ++i) y[i] += shift * x[i];
    nrm = l2_norm(y);
    for (double& v : y) v /= nrm;
    for (std::size_t i = 0; i < n; ++i) diff[i] = y[i] - x[i];
    double rel = l2_norm(diff) / l2_norm(x);
    res.residual_trace.push_back(rel);
    x = std::move(y);
    res.iterations = k;
    if (rel < tol) {
      res.converged = true;
      break;
    }
  }
  for (double& v : x) v = std::abs(v);
  res.scores = std::move(x);
  return res;
}

bool is_hitting_set(const Hypergraph& h, std::span<const NodeId> set) {
  std::vector<bool> in(h.num_nodes(), false);
  for (NodeId v : set) in[v] = true;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto nodes = h.edge(e);
    if (std::none_of(nodes.begin(), nodes.end(), [&](NodeId v) { return in[v]; })) return false;
  }
  return true;
}

namespace {

std::vector<NodeId> greedy_minimal_hitting_set(const Hypergraph& h, std::mt19937_64& rng) {
  const std::size_t m = h.num_edges();
  std::vector<EdgeId> order(m);
  std::iota(order.begin(), order.end(), 0u);
  std::shuffle(order.begin(), order.end(), rng);

  // remaining[v] = number of still-uncovered edges containing v
  std::vector<std::size_t> remaining(h.num_nodes());
  for (NodeId v = 0; v < h.num_nodes(); ++v) remaining[v] = h.degree(v);
  std::vector<bool> covered(m, false);
  std::vector<NodeId> chosen;

  for (EdgeId e : order) {
    if (covered[e]) continue;
    NodeId best = h.edge(e)[0];
    for (NodeId v : h.edge(e))
      if (remaining[v] > remaining[best]) best = v;
    chosen.push_back(best);
    for (EdgeId f : h.incident_edges(best)) {
      if (covered[f]) continue;
      covered[f] = true;
      for (NodeId u : h.edge(f)) --remaining[u];
    }
  }

  // Reverse-order pruning. A node kept here stays necessary after later
  // removals, so a single pass yields a minimal hitting set.
  std::vector<std::size_t> hits(m, 0);
  for (NodeId v : chosen)
    for (EdgeId f : h.incident_edges(v)) ++hits[f];
  std::vector<bool> keep(chosen.size(), true);
  for (std::size_t k = chosen.size(); k-- > 0;) {
    NodeId v = chosen[k];
    auto inc = h.incident_edges(v);
    if (std::all_of(inc.begin(), inc.end(), [&](EdgeId f) { return hits[f] >= 2; })) {
      keep[k] = false;
      for (EdgeId f : inc) --hits[f];
    }
  }
  std::vector<NodeId> out;
  for (std::size_t k = 0; k < chosen.size(); ++k)
    if (keep[k]) out.push_back(chosen[k]);
  return out;
}

}  // namespace

UmhsResult umhs(const Hypergraph& h, int restarts, std::uint64_t seed) {
  if (restarts < 1) throw Error("umhs: restarts must be >= 1");
  UmhsResult res;
  std::seed_seq seq{seed};
  std::vector<std::uint32_t> restart_seeds(static_cast<std::size_t>(restarts));
  seq.generate(restart_seeds.begin(), restart_seeds.end());

  for (int r = 0; r < restarts; ++r) {
    std::mt19937_64 rng(restart_seeds[static_cast<std::size_t>(r)]);
    auto set = greedy_minimal_hitting_set(h, rng);
    res.restart_sizes.push_back(set.size());
    if (r == 0 || set.size() < res.hitting_set.size()) {
      res.hitting_set = std::move(set);
      res.best_restart = static_cast<std::size_t>(r);
    }
  }

  // Hitting-set nodes by coverage (edges hit) descending, then the rest by
  // degree descending; ties by ascending index.
  std::vector<bool> in(h.num_nodes(), false);
  for (NodeId v : res.hitting_set) in[v] = true;
  std::vector<NodeId> head(res.hitting_set), tail;
  for (NodeId v = 0; v < h.num_nodes(); ++v)
    if (!in[v]) tail.push_back(v);
  auto by_degree = [&](NodeId a, NodeId b) {
    return h.degree(a) != h.degree(b) ? h.degree(a) > h.degree(b) : a < b;
  };
  std::sort(head.begin(), head.end(), by_degree);
  std::sort(tail.begin(), tail.end(), by_degree);
  res.ranking = std::move(head);
  res.ranking.insert(res.ranking.end(), tail.begin(), tail.end());
  return res;
}

CoreScore ranking_to_scores(std::span<const NodeId> ranking, std::size_t n) {
  if (ranking.size() != n) throw Error("ranking length does not match node count");
  CoreScore s(n, 0.0);
  for (std::size_t pos = 0; pos < n; ++pos) s[ranking[pos]] = static_cast<double>(n - pos);
  return s;
}

}  // namespace hypercp
