#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "locassort/graph.hpp"

namespace locassort {

enum class WeightKind { Stationary, Ppr, Multiscale };

/// Convergence record of the truncated multiscale series.
struct SeriesDiagnostics {
  std::size_t terms = 0;        // walk steps accumulated
  bool hit_cap = false;         // stopped at eta_max rather than multi_tol
  double last_term = 0.0;       // ||v_s - v_{s-1}||_1 / (s + 1) at the final step
  double residual_estimate = 0.0;  // size of the half-step tail correction
};

/// Probability distribution over nodes, optionally anchored at a seed node.
struct WeightVector {
  std::vector<double> values;
  std::optional<NodeId> seed;
  WeightKind kind = WeightKind::Stationary;
  double alpha = 1.0;              // restart parameter for WeightKind::Ppr
  std::size_t iterations = 0;      // power iterations for WeightKind::Ppr
  SeriesDiagnostics series;        // WeightKind::Multiscale only

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t i) const noexcept { return values[i]; }
};

/// pi_i = k_i / 2m. Undirected graphs with at least one edge only.
WeightVector stationary_distribution(const Graph& graph);

}  // namespace locassort
