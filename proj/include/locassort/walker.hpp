#pragma once

#include <cstddef>
#include <cstdint>

#include "locassort/attributes.hpp"
#include "locassort/graph.hpp"
#include "locassort/weights.hpp"

namespace locassort {

struct WalkerConfig {
  double alpha = 0.85;
  double tol = 1e-10;             // L1 change between power iterates
  std::size_t max_iter = 100000;  // fixed-alpha iteration cap
  std::size_t eta_max = 10000;    // multiscale series truncation cap
  double multi_tol = 1e-9;        // per-term stopping threshold of the series

  /// Throws ErrorKind::Usage when a field is out of range.
  void validate() const;
};

/// Personalized PageRank: the stationary distribution of a walk that
/// restarts at `seed` with probability 1 - alpha, i.e. the fixed point of
///   w = alpha * M w + (1 - alpha) e_seed,   M_ij = A_ji / k_j^out.
/// Nodes without out-edges send their mass back to the seed. Computed by
/// power iteration from e_seed until successive iterates differ by less than
/// `tol` in L1; throws NonConvergenceError after `max_iter` iterations.
///
/// alpha = 1 returns the stationary distribution restricted to the seed's
/// component (undirected graphs only).
WeightVector ppr(const Graph& graph, NodeId seed, const WalkerConfig& config);

/// Personalized PageRank averaged over alpha uniform on [0, 1]:
///   w = e_seed + sum_{s>=1} (v_s - v_{s-1}) / (s + 1),   v_s = M^s e_seed.
/// The series stops at the first s whose term has L1 norm below `multi_tol`,
/// or at `eta_max`. A half-weighted next term is added as the tail estimate,
/// which keeps the error O(1/eta^2) on periodic (bipartite) graphs where the
/// terms only decay like 1/s. See WeightVector::series for diagnostics.
WeightVector multiscale_weights(const Graph& graph, NodeId seed, const WalkerConfig& config);

struct AutocorrelationEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

/// Runs a simple random walk of `steps` transitions from a degree-weighted
/// random start and estimates the lag-1 autocorrelation of the attribute
/// seen along the walk. Scalar columns use the degree-weighted standardized
/// values; categorical columns use the same-type transition rate normalized
/// like the global assortativity coefficient. Standard error from 100 batch
/// means. Requires an undirected connected graph and a fully observed column.
AutocorrelationEstimate simulate_walk_autocorrelation(const Graph& graph,
                                                      const AttributeColumn& column,
                                                      std::size_t steps, std::uint64_t rng_seed);

}  // namespace locassort
