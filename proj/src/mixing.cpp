#include "locassort/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "locassort/error.hpp"

namespace locassort {

namespace {

constexpr double kDegenerateQmax = 1e-12;

void require_kind(const AttributeColumn& column, ColumnKind kind, const Graph& graph) {
  if (column.kind != kind)
    throw Error(ErrorKind::Usage, "attribute '" + column.name + "' is " +
                                      (column.kind == ColumnKind::Scalar ? "scalar" : "categorical") +
                                      ", expected " +
                                      (kind == ColumnKind::Scalar ? "scalar" : "categorical"));
  if (column.size() != graph.num_nodes())
    throw Error(ErrorKind::Usage, "attribute '" + column.name + "' length does not match graph");
}

void finish_marginals(MixingMatrix& mix) {
  const auto g = mix.num_categories;
  mix.a.assign(g, 0.0);
  mix.b.assign(g, 0.0);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      mix.a[i] += mix.at(i, j);
      mix.b[j] += mix.at(i, j);
    }
}

}  // namespace

double MixingMatrix::trace() const noexcept {
  double t = 0.0;
  for (std::size_t g = 0; g < num_categories; ++g) t += at(g, g);
  return t;
}

double MixingMatrix::expected_same() const noexcept {
  double s = 0.0;
  for (std::size_t g = 0; g < num_categories; ++g) s += a[g] * b[g];
  return s;
}

MixingMatrix mixing_matrix(const Graph& graph, const AttributeColumn& column,
                           const WeightVector* weights) {
  require_kind(column, ColumnKind::Categorical, graph);
  const auto g = column.num_categories();
  const auto n = graph.num_nodes();
  MixingMatrix mix;
  mix.num_categories = g;
  mix.directed = graph.directed();
  mix.e.assign(g * g, 0.0);

  if (weights == nullptr) {
    // Integer arc counts keep the undirected matrix exactly symmetric.
    auto& counts = mix.counts;
    counts.assign(g * g, 0);
    std::size_t retained = 0;
    for (NodeId i = 0; i < n; ++i) {
      const auto yi = column.categories[i];
      if (yi == kMissingCategory) continue;
      for (NodeId j : graph.out_neighbors(i)) {
        const auto yj = column.categories[j];
        if (yj == kMissingCategory) continue;
        ++counts[static_cast<std::size_t>(yi) * g + static_cast<std::size_t>(yj)];
        ++retained;
      }
    }
    const double arcs = static_cast<double>(graph.directed() ? graph.num_edges() : 2 * graph.num_edges());
    mix.attainable_mass = arcs > 0 ? 1.0 : 0.0;
    mix.observed_mass = arcs > 0 ? static_cast<double>(retained) / arcs : 0.0;
    if (retained == 0)
      throw Error(ErrorKind::EmptyMixing,
                  "no edge has both endpoints labelled for attribute '" + column.name + "'");
    for (std::size_t k = 0; k < g * g; ++k)
      mix.e[k] = static_cast<double>(counts[k]) / static_cast<double>(retained);
  } else {
    if (weights->size() != n) throw Error(ErrorKind::Usage, "weight vector length does not match graph");
    double observed = 0.0;
    double attainable = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      const double wi = weights->values[i];
      const auto k = graph.out_degree(i);
      if (wi == 0.0 || k == 0) continue;
      const double t = wi / static_cast<double>(k);
      const auto yi = column.categories[i];
      for (NodeId j : graph.out_neighbors(i)) {
        attainable += t;
        const auto yj = column.categories[j];
        if (yi == kMissingCategory || yj == kMissingCategory) continue;
        observed += t;
        mix.e[static_cast<std::size_t>(yi) * g + static_cast<std::size_t>(yj)] += t;
      }
    }
    mix.observed_mass = observed;
    mix.attainable_mass = attainable;
    if (!(observed > 0.0))
      throw Error(ErrorKind::EmptyMixing,
                  "no weighted edge has both endpoints labelled for attribute '" + column.name + "'");
    for (auto& x : mix.e) x /= observed;
  }
  finish_marginals(mix);
  return mix;
}

double global_assort_cat(const MixingMatrix& mix) {
  const double qmax = mix.q_max();
  if (!(qmax > kDegenerateQmax))
    throw Error(ErrorKind::DegenerateAttribute,
                "attribute has a single effective category (Q_max = " + std::to_string(qmax) + ")");
  if (!mix.counts.empty()) {
    // Same ratio in integer arc counts, so only the final division rounds.
    const auto g = mix.num_categories;
    __int128 total = 0, same = 0, expected = 0;
    std::vector<__int128> a(g, 0), b(g, 0);
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) {
        const auto c = static_cast<__int128>(mix.counts[i * g + j]);
        total += c;
        a[i] += c;
        b[j] += c;
      }
    for (std::size_t i = 0; i < g; ++i) {
      same += static_cast<__int128>(mix.counts[i * g + i]);
      expected += a[i] * b[i];
    }
    return static_cast<double>(total * same - expected) / static_cast<double>(total * total - expected);
  }
  return (mix.trace() - mix.expected_same()) / qmax;
}

MinimumAssortativity r_min(const MixingMatrix& mix) {
  const double qmax = mix.q_max();
  if (!(qmax > kDegenerateQmax))
    throw Error(ErrorKind::DegenerateAttribute,
                "attribute has a single effective category (Q_max = " + std::to_string(qmax) + ")");
  MinimumAssortativity out;
  out.value = -mix.expected_same() / qmax;
  out.below_minus_one = out.value < -1.0;
  return out;
}

ScalarStandardization standardize(const Graph& graph, const AttributeColumn& column) {
  require_kind(column, ColumnKind::Scalar, graph);
  if (graph.directed())
    throw Error(ErrorKind::Usage, "scalar assortativity is implemented for undirected graphs only");
  const auto n = graph.num_nodes();
  const auto& x = column.values;

  // Degrees within the fully observed subgraph.
  std::vector<double> k(n, 0.0);
  double total = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (NodeId i = 0; i < n; ++i) {
    if (std::isnan(x[i])) continue;
    for (NodeId j : graph.out_neighbors(i))
      if (!std::isnan(x[j])) k[i] += 1.0;
    if (k[i] > 0.0) {
      total += k[i];
      lo = std::min(lo, x[i]);
      hi = std::max(hi, x[i]);
    }
  }
  if (total == 0.0)
    throw Error(ErrorKind::EmptyMixing,
                "no edge has both endpoints observed for attribute '" + column.name + "'");
  if (!(hi > lo))
    throw Error(ErrorKind::DegenerateAttribute,
                "attribute '" + column.name + "' is constant on observed edges");

  ScalarStandardization s;
  for (NodeId i = 0; i < n; ++i)
    if (k[i] > 0.0) s.mean += k[i] / total * x[i];
  double var = 0.0;
  for (NodeId i = 0; i < n; ++i)
    if (k[i] > 0.0) var += k[i] / total * (x[i] - s.mean) * (x[i] - s.mean);
  if (!(var > 0.0))
    throw Error(ErrorKind::DegenerateAttribute, "attribute '" + column.name + "' has zero variance");
  s.sigma = std::sqrt(var);
  s.standardized.resize(n);
  for (NodeId i = 0; i < n; ++i) s.standardized[i] = (x[i] - s.mean) / s.sigma;
  return s;
}

double global_assort_scalar(const Graph& graph, const AttributeColumn& column) {
  const auto s = standardize(graph, column);
  const auto& xt = s.standardized;
  double sum = 0.0;
  double arcs = 0.0;
  for (NodeId i = 0; i < graph.num_nodes(); ++i) {
    if (std::isnan(xt[i])) continue;
    for (NodeId j : graph.out_neighbors(i)) {
      if (std::isnan(xt[j])) continue;
      sum += xt[i] * xt[j];
      arcs += 1.0;
    }
  }
  return sum / arcs;
}

LocalMixingResult local_assort_cat(const Graph& graph, const AttributeColumn& column, NodeId seed,
                                   const WeightVector& weights, const MixingMatrix& global_mix) {
  require_kind(column, ColumnKind::Categorical, graph);
  if (weights.size() != graph.num_nodes())
    throw Error(ErrorKind::Usage, "weight vector length does not match graph");
  const double qmax = global_mix.q_max();
  if (!(qmax > kDegenerateQmax))
    throw Error(ErrorKind::DegenerateAttribute, "attribute has a single effective category");

  double observed = 0.0;
  double attainable = 0.0;
  double same = 0.0;
  for (NodeId i = 0; i < graph.num_nodes(); ++i) {
    const double wi = weights.values[i];
    const auto k = graph.out_degree(i);
    if (wi == 0.0 || k == 0) continue;
    const double t = wi / static_cast<double>(k);
    const auto yi = column.categories[i];
    for (NodeId j : graph.out_neighbors(i)) {
      attainable += t;
      const auto yj = column.categories[j];
      if (yi == kMissingCategory || yj == kMissingCategory) continue;
      observed += t;
      if (yi == yj) same += t;
    }
  }

  LocalMixingResult out;
  out.node = seed;
  out.attribute = column.name;
  out.kind = weights.kind == WeightKind::Multiscale ? LocalKind::Multiscale
             : weights.kind == WeightKind::Ppr      ? LocalKind::FixedAlpha
                                                    : LocalKind::Custom;
  out.alpha = weights.kind == WeightKind::Ppr ? weights.alpha : 0.0;
  if (observed > 0.0) {
    out.z = attainable > 0.0 ? std::min(1.0, observed / attainable) : 0.0;
    out.r = (same / observed - global_mix.expected_same()) / qmax;
  }
  return out;
}

LocalMixingResult local_assort_scalar(const Graph& graph, const AttributeColumn& column, NodeId seed,
                                      const WeightVector& weights,
                                      const ScalarStandardization& standardization) {
  require_kind(column, ColumnKind::Scalar, graph);
  if (weights.size() != graph.num_nodes())
    throw Error(ErrorKind::Usage, "weight vector length does not match graph");
  const auto& xt = standardization.standardized;

  double observed = 0.0;
  double attainable = 0.0;
  double sum = 0.0;
  for (NodeId i = 0; i < graph.num_nodes(); ++i) {
    const double wi = weights.values[i];
    const auto k = graph.out_degree(i);
    if (wi == 0.0 || k == 0) continue;
    const double t = wi / static_cast<double>(k);
    for (NodeId j : graph.out_neighbors(i)) {
      attainable += t;
      if (std::isnan(xt[i]) || std::isnan(xt[j])) continue;
      observed += t;
      sum += t * xt[i] * xt[j];
    }
  }

  LocalMixingResult out;
  out.node = seed;
  out.attribute = column.name;
  out.kind = weights.kind == WeightKind::Multiscale ? LocalKind::Multiscale
             : weights.kind == WeightKind::Ppr      ? LocalKind::FixedAlpha
                                                    : LocalKind::Custom;
  out.alpha = weights.kind == WeightKind::Ppr ? weights.alpha : 0.0;
  if (observed > 0.0) {
    out.z = attainable > 0.0 ? std::min(1.0, observed / attainable) : 0.0;
    out.r = sum / observed;
  }
  return out;
}

LocalAssortativity::LocalAssortativity(const Graph& graph, const AttributeColumn& column)
    : graph_(&graph), column_(&column) {
  if (column.kind == ColumnKind::Categorical) {
    mix_ = mixing_matrix(graph, column);
    global_ = global_assort_cat(*mix_);
  } else {
    scalar_ = standardize(graph, column);
    global_ = global_assort_scalar(graph, column);
  }
}

LocalMixingResult LocalAssortativity::evaluate(NodeId seed, const WeightVector& weights) const {
  if (mix_) return local_assort_cat(*graph_, *column_, seed, weights, *mix_);
  return local_assort_scalar(*graph_, *column_, seed, weights, *scalar_);
}

LocalMixingResult LocalAssortativity::fixed_alpha(NodeId seed, const WalkerConfig& config) const {
  auto result = evaluate(seed, ppr(*graph_, seed, config));
  result.kind = LocalKind::FixedAlpha;
  result.alpha = config.alpha;
  return result;
}

LocalMixingResult LocalAssortativity::multiscale(NodeId seed, const WalkerConfig& config) const {
  return evaluate(seed, multiscale_weights(*graph_, seed, config));
}

LocalMixingResult local_assort_multiscale(const Graph& graph, const AttributeColumn& column,
                                          NodeId seed, const WalkerConfig& config) {
  return LocalAssortativity(graph, column).multiscale(seed, config);
}

AssortCorrelation assort_correlation(std::span<const LocalMixingResult> a,
                                     std::span<const LocalMixingResult> b, bool weighted) {
  std::unordered_map<NodeId, const LocalMixingResult*> by_node;
  by_node.reserve(b.size());
  for (const auto& rb : b) by_node.emplace(rb.node, &rb);

  struct Pair {
    double ra, rb, w;
  };
  std::vector<Pair> pairs;
  for (const auto& ra : a) {
    auto it = by_node.find(ra.node);
    if (it == by_node.end() || !ra.r || !it->second->r) continue;
    const double w = weighted ? std::min(ra.z, it->second->z) : 1.0;
    if (!(w > 0.0)) continue;
    pairs.push_back({*ra.r, *it->second->r, w});
  }
  if (pairs.size() < 3)
    throw Error(ErrorKind::DegenerateAttribute,
                "need at least 3 nodes defined in both result sets, found " + std::to_string(pairs.size()));

  double wsum = 0.0, ma = 0.0, mb = 0.0, greater = 0.0;
  for (const auto& p : pairs) {
    wsum += p.w;
    ma += p.w * p.ra;
    mb += p.w * p.rb;
    if (p.ra > p.rb) greater += p.w;
  }
  ma /= wsum;
  mb /= wsum;
  double saa = 0.0, sbb = 0.0, sab = 0.0;
  for (const auto& p : pairs) {
    saa += p.w * (p.ra - ma) * (p.ra - ma);
    sbb += p.w * (p.rb - mb) * (p.rb - mb);
    sab += p.w * (p.ra - ma) * (p.rb - mb);
  }
  if (!(saa > 0.0) || !(sbb > 0.0))
    throw Error(ErrorKind::DegenerateAttribute, "local assortativity is constant in one result set");

  AssortCorrelation out;
  out.pearson = std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
  out.frac_a_gt_b = greater / wsum;
  out.compared = pairs.size();
  return out;
}

}  // namespace locassort
