#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "locassort/attributes.hpp"
#include "locassort/graph.hpp"
#include "locassort/walker.hpp"
#include "locassort/weights.hpp"

namespace locassort {

/// Joint distribution e_gh of edge-endpoint types with marginals
/// a_g = sum_h e_gh and b_h = sum_g e_gh. Normalized to unit total mass.
struct MixingMatrix {
  std::size_t num_categories = 0;
  std::vector<double> e;  // row-major, num_categories^2
  std::vector<double> a;
  std::vector<double> b;
  /// Raw arc counts behind e for the unweighted matrix; empty when weighted.
  std::vector<std::uint64_t> counts;
  /// Mass of retained edge terms before normalization.
  double observed_mass = 0.0;
  /// Mass the edge terms would carry if no endpoint were missing.
  double attainable_mass = 0.0;
  bool directed = false;

  double at(std::size_t g, std::size_t h) const noexcept { return e[g * num_categories + h]; }
  /// omega_in = sum_g e_gg.
  double trace() const noexcept;
  /// sum_g a_g b_g.
  double expected_same() const noexcept;
  double q_max() const noexcept { return 1.0 - expected_same(); }
  double modularity() const noexcept { return trace() - expected_same(); }
};

/// e_gh from the adjacency (weights == nullptr): each arc carries 1/2m
/// (undirected) or 1/m (directed). With weights, arc i->j carries
/// w(i) / k_i^out. Terms with a missing endpoint are skipped and the rest
/// renormalized. Throws ErrorKind::EmptyMixing when nothing is retained.
MixingMatrix mixing_matrix(const Graph& graph, const AttributeColumn& column,
                           const WeightVector* weights = nullptr);

/// (sum_g e_gg - sum_g a_g b_g) / (1 - sum_g a_g b_g).
/// Throws ErrorKind::DegenerateAttribute when Q_max <= 1e-12.
double global_assort_cat(const MixingMatrix& mix);

struct MinimumAssortativity {
  double value = 0.0;
  /// The formula can fall below -1 when sum_g a_g b_g > 1/2; returned as is.
  bool below_minus_one = false;
};

/// Lower bound -sum a_g b_g / (1 - sum a_g b_g) of the coefficient.
MinimumAssortativity r_min(const MixingMatrix& mix);

enum class LocalKind { FixedAlpha, Multiscale, Custom };

struct LocalMixingResult {
  NodeId node = 0;
  /// Empty when undefined (no observed edge mass around the node).
  std::optional<double> r;
  /// Fraction of the attainable local edge mass with both endpoints observed.
  double z = 0.0;
  LocalKind kind = LocalKind::Custom;
  double alpha = 0.0;
  std::string attribute;
};

/// Degree-weighted standardization of a scalar column over the subgraph of
/// edges whose endpoints are both observed.
struct ScalarStandardization {
  double mean = 0.0;
  double sigma = 0.0;
  std::vector<double> standardized;  // NaN where missing
};

ScalarStandardization standardize(const Graph& graph, const AttributeColumn& column);

/// Pearson correlation of the attribute across both orientations of every
/// fully observed edge. Undirected graphs only.
double global_assort_scalar(const Graph& graph, const AttributeColumn& column);

/// r(l) = (sum_g e_gg(l) - sum_g a_g b_g) / Q_max with e(l) the
/// weight-reweighted mixing matrix and a, b, Q_max from `global_mix`.
LocalMixingResult local_assort_cat(const Graph& graph, const AttributeColumn& column, NodeId seed,
                                   const WeightVector& weights, const MixingMatrix& global_mix);

/// r(l) = sum_ij w(i) A_ij / k_i x~_i x~_j over observed edges, renormalized
/// by the observed mass.
LocalMixingResult local_assort_scalar(const Graph& graph, const AttributeColumn& column, NodeId seed,
                                      const WeightVector& weights,
                                      const ScalarStandardization& standardization);

/// Precomputes the global reference quantities of one attribute so that
/// many seeds can be evaluated cheaply. Dispatches on the column kind.
class LocalAssortativity {
 public:
  LocalAssortativity(const Graph& graph, const AttributeColumn& column);

  const Graph& graph() const noexcept { return *graph_; }
  const AttributeColumn& column() const noexcept { return *column_; }
  double global() const noexcept { return global_; }
  const std::optional<MixingMatrix>& global_mix() const noexcept { return mix_; }

  LocalMixingResult evaluate(NodeId seed, const WeightVector& weights) const;
  LocalMixingResult fixed_alpha(NodeId seed, const WalkerConfig& config) const;
  LocalMixingResult multiscale(NodeId seed, const WalkerConfig& config) const;

 private:
  const Graph* graph_;
  const AttributeColumn* column_;
  std::optional<MixingMatrix> mix_;
  std::optional<ScalarStandardization> scalar_;
  double global_ = 0.0;
};

LocalMixingResult local_assort_multiscale(const Graph& graph, const AttributeColumn& column,
                                          NodeId seed, const WalkerConfig& config);

struct AssortCorrelation {
  double pearson = 0.0;
  /// Weighted fraction of nodes with r_A > r_B (ties count as not greater).
  double frac_a_gt_b = 0.0;
  std::size_t compared = 0;
};

/// Compares two per-node result sets matched by node id. Nodes undefined in
/// either set are dropped; each remaining node is weighted by min(z_A, z_B),
/// or by 1 when `weighted` is false. Needs at least three comparable nodes.
AssortCorrelation assort_correlation(std::span<const LocalMixingResult> a,
                                     std::span<const LocalMixingResult> b, bool weighted = true);

}  // namespace locassort
