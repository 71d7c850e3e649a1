#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "locassort/attributes.hpp"
#include "locassort/graph.hpp"

namespace fixtures {

using locassort::AttributeColumn;
using locassort::Edge;
using locassort::Graph;
using locassort::NodeId;

inline Graph make_graph(std::size_t n, std::vector<Edge> edges, bool directed = false) {
  return Graph::from_edges(n, edges, directed);
}

inline AttributeColumn labels(const std::vector<std::string>& v, std::string name = "type") {
  std::vector<std::optional<std::string>> o(v.begin(), v.end());
  for (auto& x : o)
    if (x && x->empty()) x.reset();
  return AttributeColumn::categorical(std::move(name), o);
}

inline AttributeColumn values(const std::vector<double>& v, std::string name = "x") {
  std::vector<std::optional<double>> o;
  for (double x : v) o.push_back(std::isnan(x) ? std::nullopt : std::optional<double>(x));
  return AttributeColumn::scalar(std::move(name), o);
}

/// Random connected undirected graph: a random spanning tree, a triangle on
/// nodes 0-1-2 (so the walk is aperiodic) and `extra` random edges.
inline Graph random_connected(std::size_t n, std::size_t extra, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<std::pair<NodeId, NodeId>> e;
  auto add = [&](NodeId u, NodeId v) {
    if (u == v) return false;
    return e.insert({std::min(u, v), std::max(u, v)}).second;
  };
  for (NodeId v = 1; v < n; ++v) add(v, std::uniform_int_distribution<NodeId>(0, v - 1)(rng));
  if (n >= 3) {
    add(0, 1);
    add(1, 2);
    add(0, 2);
  }
  const std::size_t cap = n * (n - 1) / 2;
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
  for (std::size_t k = 0; k < extra && e.size() < cap;)
    if (add(pick(rng), pick(rng))) ++k;
  return make_graph(n, {e.begin(), e.end()});
}

/// Random directed graph on n nodes with arc probability p (may have
/// dangling nodes).
inline Graph random_directed(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = 0; v < n; ++v)
      if (u != v && coin(rng)) e.emplace_back(u, v);
  return make_graph(n, e, true);
}

/// Uniform random labels over `g` categories named "g0", "g1", ...
inline AttributeColumn random_labels(std::size_t n, std::size_t g, std::uint64_t seed,
                                     double missing = 0.0) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, g - 1);
  std::bernoulli_distribution gone(missing);
  std::vector<std::optional<std::string>> o(n);
  for (auto& x : o) {
    const auto c = pick(rng);
    if (!gone(rng)) x = "g" + std::to_string(c);
  }
  return AttributeColumn::categorical("type", o);
}

/// Two cliques of size k joined by a single edge; types follow the cliques.
inline Graph two_cliques(std::size_t k, bool bridge = true) {
  std::vector<Edge> e;
  for (NodeId base : {NodeId{0}, static_cast<NodeId>(k)})
    for (NodeId u = 0; u < k; ++u)
      for (NodeId v = u + 1; v < k; ++v) e.emplace_back(base + u, base + v);
  if (bridge) e.emplace_back(0, static_cast<NodeId>(k));
  return make_graph(2 * k, e);
}

inline AttributeColumn halves(std::size_t k) {
  std::vector<std::string> v(2 * k, "c");
  std::fill(v.begin() + static_cast<std::ptrdiff_t>(k), v.end(), "d");
  return labels(v);
}

/// Complete bipartite K_{k,k}: nodes [0, k) on one side.
inline Graph complete_bipartite(std::size_t k) {
  std::vector<Edge> e;
  for (NodeId u = 0; u < k; ++u)
    for (NodeId v = 0; v < k; ++v) e.emplace_back(u, static_cast<NodeId>(k + v));
  return make_graph(2 * k, e);
}

/// Path 0 - 1 - ... - (n-1).
inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return make_graph(n, e);
}

/// Planted two-block graph: blocks of size n/2, within-block edge
/// probability p_in, between-block p_out, plus a path through every node so
/// it is connected.
inline Graph two_block(std::size_t n, double p_in, double p_out, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<std::pair<NodeId, NodeId>> e;
  for (NodeId v = 1; v < n; ++v) e.insert({v - 1, v});
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) {
      const bool same = (u < n / 2) == (v < n / 2);
      if (std::bernoulli_distribution(same ? p_in : p_out)(rng)) e.insert({u, v});
    }
  return make_graph(n, {e.begin(), e.end()});
}

}  // namespace fixtures
