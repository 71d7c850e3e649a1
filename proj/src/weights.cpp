#include "locassort/weights.hpp"

#include "locassort/error.hpp"

namespace locassort {

WeightVector stationary_distribution(const Graph& graph) {
  if (graph.directed())
    throw Error(ErrorKind::Usage, "stationary distribution is only defined here for undirected graphs");
  if (graph.num_edges() == 0) throw Error(ErrorKind::Usage, "graph has no edges");
  WeightVector w;
  w.kind = WeightKind::Stationary;
  w.values.resize(graph.num_nodes());
  const double two_m = 2.0 * static_cast<double>(graph.num_edges());
  for (NodeId v = 0; v < graph.num_nodes(); ++v)
    w.values[v] = static_cast<double>(graph.degree(v)) / two_m;
  return w;
}

}  // namespace locassort
