#include "hypercp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "hypercp/numeric.hpp"

namespace hypercp {

namespace {

// Work below this many incidences is not worth spawning threads for.
constexpr std::size_t kParallelGrain = 1 << 14;

// Chunk size for a pass over `items` rows; small inputs stay on one thread.
std::size_t pass_grain(const Hypergraph& h, std::size_t items) {
  if (h.degree_sum() < kParallelGrain) return items + 1;
  return std::max<std::size_t>(64, items * kParallelGrain / (4 * h.degree_sum()));
}

void check_length(const Hypergraph& h, std::span<const double> x) {
  if (x.size() != h.num_nodes())
    throw Error("vector length " + std::to_string(x.size()) + " does not match node count " +
                std::to_string(h.num_nodes()));
}

void check_xi(const Hypergraph& h, std::span<const double> xi) {
  if (xi.size() != h.num_edges())
    throw Error("xi length " + std::to_string(xi.size()) + " does not match edge count " +
                std::to_string(h.num_edges()));
}

// Per-edge (max, sum of (x/max)^q) for the rescaled q-norm.
void edge_power_sums(const Hypergraph& h, std::span<const double> x, double q,
                     std::vector<double>& scale, std::vector<double>& sum) {
  scale.assign(h.num_edges(), 0.0);
  sum.assign(h.num_edges(), 0.0);
  parallel_for(h.num_edges(), pass_grain(h, h.num_edges()), [&](std::size_t b, std::size_t e_end) {
    for (std::size_t e = b; e < e_end; ++e) {
      double m = 0.0;
      for (NodeId v : h.edge(static_cast<EdgeId>(e))) m = std::max(m, x[v]);
      double s = 0.0;
      if (m > 0.0)
        for (NodeId v : h.edge(static_cast<EdgeId>(e))) s += std::pow(x[v] / m, q);
      scale[e] = m;
      sum[e] = s;
    }
  });
}

// Thompson distance over entries where both vectors are positive.
double support_thompson(std::span<const double> x, std::span<const double> y) {
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > 0.0 && y[i] > 0.0) d = std::max(d, std::abs(std::log(x[i]) - std::log(y[i])));
  return d;
}

void normalize_p(std::vector<double>& x, double p) {
  double nrm = lp_norm(x, p);
  if (nrm == 0.0 || !std::isfinite(nrm)) throw Error("cannot normalize a zero or non-finite vector");
  for (double& v : x) v /= nrm;
}

}  // namespace

void SolverConfig::validate() const {
  if (!(q > 1.0)) throw Error("q must be > 1");
  if (!(p > q)) throw Error("p must be > q (got p=" + std::to_string(p) + ", q=" + std::to_string(q) + ")");
  if (!std::isfinite(p)) throw Error("p must be finite");
  if (!(tol > 0.0)) throw Error("tol must be positive");
  if (max_iter <= 0) throw Error("max_iter must be positive");
}

double objective(const Hypergraph& h, std::span<const double> xi_values,
                 std::span<const double> x, double q) {
  check_length(h, x);
  check_xi(h, xi_values);
  for (double v : x)
    if (v < 0.0) throw Error("objective: negative entry in x");
  double f = 0.0;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    double m = 0.0;
    for (NodeId v : h.edge(e)) m = std::max(m, x[v]);
    if (m == 0.0) continue;
    double s = 0.0;
    for (NodeId v : h.edge(e)) s += std::pow(x[v] / m, q);
    f += xi_values[e] * m * std::pow(s, 1.0 / q);
  }
  return f;
}

double objective(const Hypergraph& h, XiRule xi, std::span<const double> x, double q) {
  return objective(h, xi_vector(h, xi), x, q);
}

std::vector<double> apply_F(const Hypergraph& h, std::span<const double> xi_values,
                            std::span<const double> x, double q) {
  check_length(h, x);
  check_xi(h, xi_values);
  for (NodeId i = 0; i < h.num_nodes(); ++i)
    if (!h.isolated(i) && !(x[i] > 0.0))
      throw Error("apply_F: non-positive entry at non-isolated node " + std::to_string(i));

  std::vector<double> scale, sum;
  edge_power_sums(h, x, q, scale, sum);

  // t_e = xi(e) * s_e^(1/q - 1); the m_e^(1-q) factor is folded into the
  // node pass as (x_i / m_e)^(q-1), which never exceeds 1.
  std::vector<double> t(h.num_edges());
  for (EdgeId e = 0; e < h.num_edges(); ++e) t[e] = xi_values[e] * std::pow(sum[e], 1.0 / q - 1.0);

  std::vector<double> F(h.num_nodes(), 0.0);
  parallel_for(h.num_nodes(), pass_grain(h, h.num_nodes()), [&](std::size_t b, std::size_t e_end) {
    for (std::size_t i = b; i < e_end; ++i) {
      double acc = 0.0;
      for (EdgeId e : h.incident_edges(static_cast<NodeId>(i)))
        acc += t[e] * std::pow(x[i] / scale[e], q - 1.0);
      F[i] = acc;
    }
  });
  return F;
}

std::vector<double> apply_F(const Hypergraph& h, XiRule xi, std::span<const double> x, double q) {
  return apply_F(h, xi_vector(h, xi), x, q);
}

std::vector<double> iteration_map(const Hypergraph& h, std::span<const double> xi_values,
                                  std::span<const double> x, double p, double q) {
  std::vector<double> y = apply_F(h, xi_values, x, q);
  double pstar = p / (p - 1.0);
  double nrm = lp_norm(y, pstar);
  if (nrm == 0.0) throw Error("iteration_map: F(x) vanished");
  double expo = 1.0 / (p - 1.0);
  for (double& v : y) v = std::pow(v / nrm, expo);
  return y;
}

SolverResult hypernsm(const Hypergraph& h, const SolverConfig& cfg) {
  cfg.validate();
  if (h.num_edges() == 0) throw Error("hypernsm: hypergraph has no edges");

  const std::size_t n = h.num_nodes();
  const std::vector<double> xi = xi_vector(h, cfg.xi);

  SolverResult res;
  std::vector<double> x(n, 0.0);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> start(0.5, 1.5);
  for (NodeId i = 0; i < n; ++i) {
    if (h.isolated(i))
      ++res.isolated_nodes;
    else
      x[i] = start(rng);
  }
  normalize_p(x, cfg.p);

  std::vector<double> diff(n);
  double prev_step = 0.0;
  for (int k = 1; k <= cfg.max_iter; ++k) {
    std::vector<double> next = iteration_map(h, xi, x, cfg.p, cfg.q);
    for (std::size_t i = 0; i < n; ++i) diff[i] = next[i] - x[i];
    double rel = l2_norm(diff) / l2_norm(x);
    res.residual_trace.push_back(rel);

    double step = support_thompson(next, x);
    if (k > 1) res.contraction_trace.push_back(prev_step > 0.0 ? step / prev_step : 0.0);
    prev_step = step;

    x = std::move(next);
    res.iterations = k;
    if (rel < cfg.tol) {
      res.converged = true;
      break;
    }
  }

  normalize_p(x, cfg.p);
  for (NodeId i = 0; i < n; ++i)
    if (h.isolated(i)) x[i] = 0.0;
  res.eigenvalue = lp_norm(apply_F(h, xi, x, cfg.q), cfg.p_conjugate());
  res.scores = std::move(x);
  return res;
}

double eigen_residual(const Hypergraph& h, XiRule xi, const SolverResult& result,
                      const SolverConfig& cfg) {
  const auto& x = result.scores;
  check_length(h, x);
  const double p = cfg.p, q = cfg.q;
  const std::vector<double> xiv = xi_vector(h, xi);

  // Eigenvector of the nonlinear problem, and f(v) = v^(q/(p-q)).
  std::vector<double> v(x.size()), fv(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    v[i] = std::pow(x[i], p - q);
    fv[i] = std::pow(v[i], q / (p - q));
  }

  // g((B^T f(v))_e) = (sum_{k in e} f(v_k))^(1/q - 1)
  std::vector<double> g(h.num_edges());
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    double m = 0.0;
    for (NodeId k : h.edge(e)) m = std::max(m, fv[k]);
    double s = 0.0;
    for (NodeId k : h.edge(e)) s += fv[k] / m;
    g[e] = std::pow(m, 1.0 / q - 1.0) * std::pow(s, 1.0 / q - 1.0);
  }

  std::vector<double> r(x.size(), 0.0);
  for (NodeId i = 0; i < x.size(); ++i) {
    double lhs = 0.0;
    for (EdgeId e : h.incident_edges(i)) lhs += xiv[e] * g[e];
    r[i] = lhs - result.eigenvalue * v[i];
  }
  return l2_norm(r) / (result.eigenvalue * l2_norm(v));
}

double thompson_distance(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error("thompson_distance: length mismatch");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw Error("thompson_distance: non-positive entry");
  return support_thompson(x, y);
}

}  // namespace hypercp
