#pragma once

#include <span>

#include "locassort/graph.hpp"

// Sparse walk kernels. Each OpenMP kernel has a serial twin with identical
// arithmetic, kept as the reference for tests and benchmarks.
namespace locassort::kernels {

/// One step of the simple random walk, out = M in, where
/// M_ij = A_ji / k_j^out. Mass sitting on nodes without out-edges is moved
/// to `restart` (the seed), so total mass is conserved.
void walk_step(const Graph& graph, std::span<const double> in, std::span<double> out,
               NodeId restart);
void walk_step_serial(const Graph& graph, std::span<const double> in, std::span<double> out,
                      NodeId restart);

double l1_distance(std::span<const double> a, std::span<const double> b);
double l1_distance_serial(std::span<const double> a, std::span<const double> b);

}  // namespace locassort::kernels
