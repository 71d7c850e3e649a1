#include "locassort/kernels.hpp"

#include <cmath>
#include <vector>

namespace locassort::kernels {

namespace {

// Below this size the fork/join overhead dominates a single sweep.
constexpr std::ptrdiff_t kParallelThreshold = 1 << 14;

}  // namespace

void walk_step(const Graph& graph, std::span<const double> in, std::span<double> out,
               NodeId restart) {
  const auto n = static_cast<std::ptrdiff_t>(graph.num_nodes());
  std::vector<double> scaled(static_cast<std::size_t>(n));
  double dangling = 0.0;
#pragma omp parallel for reduction(+ : dangling) schedule(static) if (n >= kParallelThreshold)
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    const auto k = graph.out_degree(static_cast<NodeId>(j));
    if (k == 0) {
      scaled[j] = 0.0;
      dangling += in[j];
    } else {
      scaled[j] = in[j] / static_cast<double>(k);
    }
  }
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (NodeId j : graph.in_neighbors(static_cast<NodeId>(i))) acc += scaled[j];
    out[i] = acc;
  }
  out[restart] += dangling;
}

void walk_step_serial(const Graph& graph, std::span<const double> in, std::span<double> out,
                      NodeId restart) {
  const auto n = graph.num_nodes();
  std::vector<double> scaled(n);
  double dangling = 0.0;
  for (NodeId j = 0; j < n; ++j) {
    const auto k = graph.out_degree(j);
    if (k == 0) {
      scaled[j] = 0.0;
      dangling += in[j];
    } else {
      scaled[j] = in[j] / static_cast<double>(k);
    }
  }
  for (NodeId i = 0; i < n; ++i) {
    double acc = 0.0;
    for (NodeId j : graph.in_neighbors(i)) acc += scaled[j];
    out[i] = acc;
  }
  out[restart] += dangling;
}

double l1_distance(std::span<const double> a, std::span<const double> b) {
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static) if (n >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) sum += std::abs(a[i] - b[i]);
  return sum;
}

double l1_distance_serial(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
  return sum;
}

}  // namespace locassort::kernels
