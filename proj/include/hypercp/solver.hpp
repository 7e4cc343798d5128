#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hypercp/hypergraph.hpp"

namespace hypercp {

/// Nonnegative per-node core score; larger means more core.
using CoreScore = std::vector<double>;

struct SolverConfig {
  double p = 11.0;  // constraint norm exponent
  double q = 10.0;  // hyperedge norm exponent
  XiRule xi = XiRule::Reciprocal;
  double tol = 1e-8;
  int max_iter = 10000;
  std::uint64_t seed = 0;

  /// Throws hypercp::Error unless p > q > 1, tol > 0 and max_iter > 0.
  void validate() const;
  /// Hoelder conjugate p / (p - 1).
  double p_conjugate() const { return p / (p - 1.0); }
};

struct SolverResult {
  CoreScore scores;            // unit p-norm, zero exactly on isolated nodes
  double eigenvalue = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> residual_trace;     // relative 2-norm change per iteration
  std::vector<double> contraction_trace;  // Thompson-distance ratio of consecutive steps
  std::size_t isolated_nodes = 0;
};

// f(x) = sum_e xi(e) ||x|_e||_q. Each edge norm is accumulated with
// max-rescaling.
double objective(const Hypergraph& h, XiRule xi, std::span<const double> x, double q);
double objective(const Hypergraph& h, std::span<const double> xi_values,
                 std::span<const double> x, double q);

// Gradient map of the objective:
//   F(x)_i = x_i^(q-1) * sum_{e ∋ i} xi(e) * (sum_{k in e} x_k^q)^(1/q - 1).
// Isolated nodes map to 0. Evaluated as an edge pass followed by a node pass.
std::vector<double> apply_F(const Hypergraph& h, XiRule xi, std::span<const double> x, double q);
std::vector<double> apply_F(const Hypergraph& h, std::span<const double> xi_values,
                            std::span<const double> x, double q);

// One normalized fixed-point step H(x) = (F(x) / ||F(x)||_{p*})^(1/(p-1)).
// The result has unit p-norm and H(c x) = H(x) for every c > 0.
std::vector<double> iteration_map(const Hypergraph& h, std::span<const double> xi_values,
                                  std::span<const double> x, double p, double q);

/// Globally convergent fixed-point solver for max f(x) s.t. ||x||_p = 1, x >= 0.
SolverResult hypernsm(const Hypergraph& h, const SolverConfig& cfg);

/// Relative residual of B Xi g(B^T f(v)) = lambda v at v = scores^(p-q),
/// with g(t) = t^(1/q - 1) and f(t) = t^(q/(p-q)).
double eigen_residual(const Hypergraph& h, XiRule xi, const SolverResult& result,
                      const SolverConfig& cfg);

/// max_i |ln x_i - ln y_i|
double thompson_distance(std::span<const double> x, std::span<const double> y);

}  // namespace hypercp
