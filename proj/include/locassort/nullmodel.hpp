#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "locassort/attributes.hpp"
#include "locassort/graph.hpp"
#include "locassort/histogram.hpp"
#include "locassort/walker.hpp"

namespace locassort {

struct NullModelConfig {
  std::size_t n_samples = 100;
  /// Proposals between emitted samples; 0 means 10 m.
  std::size_t swaps_per_sample = 0;
  /// Proposals discarded before the first sample; nullopt means 100 m.
  std::optional<std::size_t> burn_in;
  double t0 = 1.0;
  double t_min = 1e-3;
  /// Geometric cooling factor applied after every proposal.
  double cooling = 0.9999;
  std::uint64_t seed = 1;

  void validate() const;
  std::size_t resolved_spacing(std::size_t m) const { return swaps_per_sample ? swaps_per_sample : 10 * m; }
  std::size_t resolved_burn_in(std::size_t m) const { return burn_in ? *burn_in : 100 * m; }
};

struct SwapStatistics {
  std::size_t proposals = 0;
  std::size_t illegal = 0;   // would create a self-loop or multi-edge
  std::size_t accepted = 0;
  std::size_t rejected = 0;  // legal but failed the likelihood test

  double acceptance_rate() const noexcept {
    return proposals ? static_cast<double>(accepted) / static_cast<double>(proposals) : 0.0;
  }
};

struct NullSample {
  Graph graph;
  std::size_t m_in = 0;     // fully labelled edges joining equal types
  double loglik = 0.0;
  double temperature = 0.0;
  SwapStatistics stats;     // cumulative since the chain started
};

/// log[ C(m, m_in) omega^m_in (1 - omega)^(m - m_in) ] via lgamma.
/// Boundary omega in {0, 1}: 0 when consistent, -infinity otherwise.
double loglik_m_in(std::size_t m_in, std::size_t m, double omega_in);

/// Degree- and label-preserving double-edge-swap chain whose Metropolis
/// filter targets the source graph's fraction of same-type edges.
///
/// Each proposal picks two edges uniformly and one of the two rewirings
/// uniformly. Rewirings that would create a self-loop or multi-edge leave
/// the graph unchanged; others are accepted with probability
/// min(1, exp(dL / t)) where L is loglik_m_in at the source omega_in.
/// The temperature follows t <- max(t_min, cooling * t) after every
/// proposal. Edges touching an unlabelled node are swapped but never
/// counted in m_in.
class NullSampler {
 public:
  NullSampler(const Graph& graph, const AttributeColumn& column, const NullModelConfig& config);

  /// Advances burn-in (first call) or one sample spacing and returns the
  /// current graph.
  NullSample next();
  /// One proposal; exposed for chain-level tests.
  void step();

  std::size_t m_in() const noexcept { return m_in_; }
  std::size_t labelled_edges() const noexcept { return m_known_; }
  double omega_in() const noexcept { return omega_; }
  double temperature() const noexcept { return t_; }
  const SwapStatistics& stats() const noexcept { return stats_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::vector<std::size_t> m_in_trace() const { return trace_; }

 private:
  bool same_type(NodeId u, NodeId v) const noexcept;
  bool labelled(NodeId u, NodeId v) const noexcept;
  static std::uint64_t key(NodeId u, NodeId v) noexcept;

  const Graph* source_;
  const AttributeColumn* column_;
  NullModelConfig config_;
  std::vector<Edge> edges_;
  std::unordered_set<std::uint64_t> present_;
  std::mt19937_64 rng_;
  std::size_t m_in_ = 0;
  std::size_t m_known_ = 0;
  double omega_ = 0.0;
  double loglik_ = 0.0;
  double t_ = 1.0;
  bool burned_in_ = false;
  SwapStatistics stats_;
  std::vector<std::size_t> trace_;
};

/// Runs the sampler and returns `config.n_samples` samples.
std::vector<NullSample> sample_null(const Graph& graph, const AttributeColumn& column,
                                    const NullModelConfig& config);

struct NullDistribution {
  WeightedHistogram histogram;
  std::vector<WeightedValue> pooled;  // z-weighted r_multi, normalized to unit total
  std::vector<std::size_t> m_in_trace;
  SwapStatistics stats;
  std::string diagnostic;
};

/// Pools z-weighted multiscale local assortativity over every node of every
/// null sample. Nodes are evaluated in parallel within a sample.
NullDistribution null_distribution(const Graph& graph, const AttributeColumn& column,
                                   const NullModelConfig& config, const WalkerConfig& walker,
                                   std::size_t bins = 50, int jobs = 0);

/// Writes sample_0000.edges, ... and manifest.json into `dir`.
/// The manifest records the config, seed, per-sample m_in, log-likelihood and
/// acceptance statistics.
void write_ensemble(const std::filesystem::path& dir, const std::vector<NullSample>& samples,
                    const NullModelConfig& config);

}  // namespace locassort
