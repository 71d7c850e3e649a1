#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's numerical code; graphs are read through their
// public adjacency only.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <mpfr.h>

#include "locassort/graph.hpp"

namespace oracle {

using locassort::Graph;
using locassort::NodeId;
using Matrix = std::vector<std::vector<double>>;

/// Column-stochastic walk matrix M_ij = A_ji / k_j with dangling columns sent
/// to `restart`.
inline Matrix walk_matrix(const Graph& g, NodeId restart) {
  const std::size_t n = g.num_nodes();
  Matrix m(n, std::vector<double>(n, 0.0));
  for (NodeId j = 0; j < n; ++j) {
    const auto nb = g.out_neighbors(j);
    if (nb.empty()) {
      m[restart][j] = 1.0;
      continue;
    }
    for (NodeId i : nb) m[i][j] += 1.0 / static_cast<double>(nb.size());
  }
  return m;
}

/// Gaussian elimination with partial pivoting; solves A X = B in place for
/// every column of B.
inline Matrix solve(Matrix a, Matrix b) {
  const std::size_t n = a.size();
  const std::size_t k = b.empty() ? 0 : b[0].size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    if (std::abs(a[p][c]) < 1e-300) throw std::runtime_error("singular system");
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      if (f == 0.0) continue;
      for (std::size_t q = c; q < n; ++q) a[r][q] -= f * a[c][q];
      for (std::size_t q = 0; q < k; ++q) b[r][q] -= f * b[c][q];
    }
  }
  Matrix x(n, std::vector<double>(k, 0.0));
  for (std::size_t q = 0; q < k; ++q)
    for (std::size_t r = n; r-- > 0;) {
      double s = b[r][q];
      for (std::size_t c = r + 1; c < n; ++c) s -= a[r][c] * x[c][q];
      x[r][q] = s / a[r][r];
    }
  return x;
}

/// PPR of one seed from the dense system (I - alpha M) w = (1 - alpha) e_seed.
inline std::vector<double> dense_ppr(const Graph& g, NodeId seed, double alpha) {
  const std::size_t n = g.num_nodes();
  auto m = walk_matrix(g, seed);
  Matrix a(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = (i == j ? 1.0 : 0.0) - alpha * m[i][j];
  Matrix b(n, std::vector<double>(1, 0.0));
  b[seed][0] = 1.0 - alpha;
  const auto x = solve(std::move(a), std::move(b));
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = x[i][0];
  return w;
}

/// PPR for every seed at once; column l holds w(.; l). Requires a graph
/// without dangling nodes so that M does not depend on the seed.
inline Matrix dense_ppr_all(const Graph& g, double alpha) {
  const std::size_t n = g.num_nodes();
  for (NodeId v = 0; v < n; ++v)
    if (g.out_degree(v) == 0) throw std::logic_error("dense_ppr_all needs k_out > 0 everywhere");
  const auto m = walk_matrix(g, 0);
  Matrix a(n, std::vector<double>(n, 0.0)), b(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    b[i][i] = 1.0 - alpha;
    for (std::size_t j = 0; j < n; ++j) a[i][j] = (i == j ? 1.0 : 0.0) - alpha * m[i][j];
  }
  return solve(std::move(a), std::move(b));
}

/// Nodes and weights of the n-point Gauss-Legendre rule on [0, 1].
inline void gauss_legendre(std::size_t n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const double pi = std::acos(-1.0);
  for (std::size_t i = 0; i < n; ++i) {
    double t = std::cos(pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (std::size_t k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-16) break;
    }
    x[i] = 0.5 * (1.0 - t);
    w[i] = 1.0 / ((1.0 - t * t) * dp * dp);
  }
}

/// Integral over alpha in [0, 1] of the dense PPR, column l = seed l.
inline Matrix quadrature_multiscale(const Graph& g, std::size_t points = 64) {
  std::vector<double> x, w;
  gauss_legendre(points, x, w);
  const std::size_t n = g.num_nodes();
  Matrix acc(n, std::vector<double>(n, 0.0));
  for (std::size_t q = 0; q < points; ++q) {
    const auto p = dense_ppr_all(g, x[q]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) acc[i][l] += w[q] * p[i][l];
  }
  return acc;
}

/// Multiscale weights in the alpha0 form: power iterates
/// w_s = alpha0 M w_{s-1} + (1 - alpha0) e_seed from w_0 = e_seed, accumulating
/// (w_s - w_{s-1}) / ((s + 1) alpha0^s). Dividing by alpha0^s amplifies the
/// rounding in each difference by alpha0^-s, so the iterates are carried in
/// MPFR with enough bits to absorb that growth over `max_terms` steps. Stops
/// once a term's L1 norm drops below `stop`.
inline std::vector<double> alpha0_series(const Graph& g, NodeId seed, double alpha0,
                                         double stop = 1e-14, std::size_t max_terms = 3000) {
  const auto bits = static_cast<mpfr_prec_t>(96 + std::ceil(max_terms * std::log2(1.0 / alpha0)));
  struct Num {
    mpfr_t v;
    explicit Num(mpfr_prec_t p) { mpfr_init2(v, p), mpfr_set_zero(v, 1); }
    Num(const Num&) = delete;
    ~Num() { mpfr_clear(v); }
  };
  const std::size_t n = g.num_nodes();
  std::vector<std::unique_ptr<Num>> prev, cur, acc;
  for (std::size_t i = 0; i < n; ++i) {
    prev.push_back(std::make_unique<Num>(bits));
    cur.push_back(std::make_unique<Num>(bits));
    acc.push_back(std::make_unique<Num>(bits));
  }
  Num a0(bits), restart(bits), scale(bits), share(bits), term(bits), norm(bits);
  mpfr_set_d(a0.v, alpha0, MPFR_RNDN);
  mpfr_ui_sub(restart.v, 1, a0.v, MPFR_RNDN);
  mpfr_set_ui(scale.v, 1, MPFR_RNDN);
  mpfr_set_ui(prev[seed]->v, 1, MPFR_RNDN);
  mpfr_set_ui(acc[seed]->v, 1, MPFR_RNDN);
  for (std::size_t s = 1; s <= max_terms; ++s) {
    for (auto& c : cur) mpfr_set_zero(c->v, 1);
    for (NodeId j = 0; j < n; ++j) {
      const auto nb = g.out_neighbors(j);
      mpfr_mul(share.v, a0.v, prev[j]->v, MPFR_RNDN);
      if (nb.empty()) {
        mpfr_add(cur[seed]->v, cur[seed]->v, share.v, MPFR_RNDN);
        continue;
      }
      mpfr_div_ui(share.v, share.v, static_cast<unsigned long>(nb.size()), MPFR_RNDN);
      for (NodeId i : nb) mpfr_add(cur[i]->v, cur[i]->v, share.v, MPFR_RNDN);
    }
    mpfr_add(cur[seed]->v, cur[seed]->v, restart.v, MPFR_RNDN);
    mpfr_mul(scale.v, scale.v, a0.v, MPFR_RNDN);
    mpfr_set_zero(norm.v, 1);
    for (std::size_t i = 0; i < n; ++i) {
      mpfr_sub(term.v, cur[i]->v, prev[i]->v, MPFR_RNDN);
      mpfr_div(term.v, term.v, scale.v, MPFR_RNDN);
      mpfr_div_ui(term.v, term.v, static_cast<unsigned long>(s + 1), MPFR_RNDN);
      mpfr_add(acc[i]->v, acc[i]->v, term.v, MPFR_RNDN);
      mpfr_abs(term.v, term.v, MPFR_RNDN);
      mpfr_add(norm.v, norm.v, term.v, MPFR_RNDN);
    }
    std::swap(prev, cur);
    if (mpfr_get_d(norm.v, MPFR_RNDN) < stop) break;
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = mpfr_get_d(acc[i]->v, MPFR_RNDN);
  return out;
}

/// Component labels by breadth-first search over both arc orientations,
/// normalised so that labels appear in increasing order of first node.
inline std::vector<std::uint32_t> bfs_components(const Graph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<std::vector<NodeId>> adj(n);
  for (const auto& [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::uint32_t> label(n, UINT32_MAX);
  std::uint32_t next = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (label[s] != UINT32_MAX) continue;
    std::queue<NodeId> q;
    q.push(s);
    label[s] = next;
    while (!q.empty()) {
      const NodeId u = q.front();
      q.pop();
      for (NodeId v : adj[u])
        if (label[v] == UINT32_MAX) {
          label[v] = next;
          q.push(v);
        }
    }
    ++next;
  }
  return label;
}

/// Pearson correlation over the list of ordered endpoint pairs (both
/// orientations of each undirected edge), skipping pairs with a NaN.
inline double edge_list_pearson(const Graph& g, const std::vector<double>& x) {
  std::vector<double> xs, ys;
  for (const auto& [u, v] : g.edges()) {
    if (std::isnan(x[u]) || std::isnan(x[v])) continue;
    xs.push_back(x[u]);
    ys.push_back(x[v]);
    if (!g.directed()) {
      xs.push_back(x[v]);
      ys.push_back(x[u]);
    }
  }
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

/// Cohen's kappa with the edges as rated items: the source endpoint is
/// rater one and the target rater two (both orientations when undirected).
/// Labels < 0 are skipped.
inline double cohens_kappa(const Graph& g, const std::vector<int>& label) {
  std::map<std::pair<int, int>, double> count;
  std::map<int, double> r1, r2;
  double total = 0;
  auto rate = [&](NodeId u, NodeId v) {
    if (label[u] < 0 || label[v] < 0) return;
    count[{label[u], label[v]}] += 1;
    r1[label[u]] += 1;
    r2[label[v]] += 1;
    total += 1;
  };
  for (const auto& [u, v] : g.edges()) {
    rate(u, v);
    if (!g.directed()) rate(v, u);
  }
  double agree = 0, chance = 0;
  for (const auto& [k, c] : count)
    if (k.first == k.second) agree += c / total;
  for (const auto& [k, c] : r1) {
    auto it = r2.find(k);
    if (it != r2.end()) chance += (c / total) * (it->second / total);
  }
  return (agree - chance) / (1 - chance);
}

/// Every simple graph reachable from `g` by double-edge swaps (which is all
/// simple graphs with its degree sequence). Returns, per graph, the number of
/// edges joining equal labels. Needs n <= 16.
inline std::vector<std::size_t> enumerate_swap_space(const Graph& g, const std::vector<int>& label) {
  const std::size_t n = g.num_nodes();
  if (n > 16) throw std::logic_error("enumeration limited to 16 nodes");
  using Key = unsigned __int128;
  // Pair (u, v) with u < v occupies bit v(v-1)/2 + u.
  auto bit = [](NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    return Key(1) << (v * (v - 1) / 2 + u);
  };
  auto decode = [n](Key k) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId v = 1; v < n; ++v)
      for (NodeId u = 0; u < v; ++u)
        if ((k >> (v * (v - 1) / 2 + u)) & 1) e.emplace_back(u, v);
    return e;
  };
  struct Hash {
    std::size_t operator()(Key k) const noexcept {
      return std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(k)) ^
             (std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(k >> 64)) * 0x9e3779b97f4a7c15ull);
    }
  };
  Key start = 0;
  for (const auto& [u, v] : g.edges()) start |= bit(u, v);
  std::unordered_set<Key, Hash> seen{start};
  std::vector<Key> frontier{start};
  std::vector<std::size_t> m_in;
  while (!frontier.empty()) {
    const Key k = frontier.back();
    frontier.pop_back();
    const auto e = decode(k);
    std::size_t same = 0;
    for (const auto& [u, v] : e) same += label[u] == label[v];
    m_in.push_back(same);
    for (std::size_t p = 0; p < e.size(); ++p)
      for (std::size_t q = p + 1; q < e.size(); ++q) {
        const auto [a, b] = e[p];
        const auto [c, d] = e[q];
        const std::pair<NodeId, NodeId> opts[2][2] = {{{a, c}, {b, d}}, {{a, d}, {b, c}}};
        for (const auto& o : opts) {
          const auto [x1, y1] = o[0];
          const auto [x2, y2] = o[1];
          if (x1 == y1 || x2 == y2) continue;
          const Key b1 = bit(x1, y1), b2 = bit(x2, y2);
          if (b1 == b2) continue;
          const Key base = k & ~bit(a, b) & ~bit(c, d);
          if ((base & b1) || (base & b2)) continue;
          const Key next = base | b1 | b2;
          if (seen.insert(next).second) frontier.push_back(next);
        }
      }
  }
  return m_in;
}

}  // namespace oracle
