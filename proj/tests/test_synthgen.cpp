#include <gtest/gtest.h>

#include <set>

#include "locassort/error.hpp"
#include "locassort/histogram.hpp"
#include "locassort/mixing.hpp"
#include "locassort/synthgen.hpp"
#include "support/fixtures.hpp"

using namespace locassort;

namespace {

/// Edge count between every pair of groups, indexed [p][q] with p <= q.
std::vector<std::vector<std::size_t>> block_counts(const GeneratedNetwork& net, std::size_t groups) {
  std::vector<std::vector<std::size_t>> c(groups, std::vector<std::size_t>(groups, 0));
  for (const auto& [u, v] : net.graph.edges()) {
    auto p = net.group_of[u], q = net.group_of[v];
    if (p > q) std::swap(p, q);
    ++c[p][q];
  }
  return c;
}

std::vector<WeightedValue> r_multi(const GeneratedNetwork& net) {
  const auto& col = net.attributes.column("type");
  const LocalAssortativity local(net.graph, col);
  std::vector<WeightedValue> out;
  for (NodeId l = 0; l < net.graph.num_nodes(); ++l) {
    const auto r = local.multiscale(l, {});
    if (r.r) out.push_back({*r.r, r.z});
  }
  return out;
}

}  // namespace

TEST(Presets, Catalog) {
  const auto presets = list_presets();
  ASSERT_EQ(presets.size(), 5u);
  std::set<std::string> names;
  for (const auto& p : presets) {
    names.insert(p.name);
    EXPECT_FALSE(p.description.empty());
    EXPECT_EQ(p.spec.num_nodes(), 40u);
    EXPECT_EQ(p.spec.num_edges(), 160u);
    EXPECT_NO_THROW(p.spec.validate());
  }
  EXPECT_EQ(names.size(), 5u);
  EXPECT_TRUE(names.count("fig2-homogeneous"));
  EXPECT_TRUE(names.count("fig2-polarized"));
  EXPECT_THROW(find_preset("no-such-preset"), Error);
}

TEST(Presets, TypeBalanceForcesZeroAssortativity) {
  for (const auto& p : list_presets()) {
    std::size_t cc = 0, dd = 0, cd = 0;
    const auto& s = p.spec;
    for (std::size_t i = 0; i < s.group_sizes.size(); ++i)
      for (std::size_t j = i; j < s.group_sizes.size(); ++j) {
        const auto e = s.block_edges[i][j];
        const bool ci = s.type_of_group[i] == "c", cj = s.type_of_group[j] == "c";
        if (ci && cj) cc += e;
        else if (!ci && !cj) dd += e;
        else cd += e;
      }
    EXPECT_EQ(cc, 40u) << p.name;
    EXPECT_EQ(dd, 40u) << p.name;
    EXPECT_EQ(cd, 80u) << p.name;
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      auto spec = p.spec;
      spec.seed = seed;
      const auto net = generate_block_network(spec);
      EXPECT_NEAR(global_assort_cat(mixing_matrix(net.graph, net.attributes.column("type"))), 0.0, 1e-12);
    }
  }
}

TEST(Presets, ConnectedOrDocumented) {
  for (const auto& p : list_presets()) {
    std::size_t disconnected = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      auto spec = p.spec;
      spec.seed = seed;
      disconnected += generate_block_network(spec).graph.num_components() != 1;
    }
    if (disconnected) EXPECT_NE(p.description.find("disconnected"), std::string::npos) << p.name;
  }
}

TEST(Generator, ExactBlockCountsAndSimple) {
  for (const auto& p : list_presets()) {
    const auto net = generate_block_network(p.spec);
    const auto counts = block_counts(net, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j) EXPECT_EQ(counts[i][j], p.spec.block_edges[i][j]) << p.name;
    EXPECT_EQ(net.graph.num_edges(), 160u);
    const auto& col = net.attributes.column("type");
    for (NodeId v = 0; v < 40; ++v)
      EXPECT_EQ(col.category_names[col.categories[v]], p.spec.type_of_group[net.group_of[v]]);
    EXPECT_EQ(net.graph.node_name(0), "c1_0");
  }
}

TEST(Generator, DeterministicPerSeed) {
  auto spec = find_preset("fig2-graded").spec;
  const auto a = generate_block_network(spec);
  const auto b = generate_block_network(spec);
  EXPECT_EQ(a.graph.edges(), b.graph.edges());
  spec.seed += 1;
  EXPECT_NE(generate_block_network(spec).graph.edges(), a.graph.edges());
}

TEST(Generator, InfeasibleNamesBlock) {
  auto spec = find_preset("fig2-homogeneous").spec;
  spec.block_edges[0][0] = 100;
  try {
    generate_block_network(spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Infeasible);
    const std::string what = e.what();
    EXPECT_NE(what.find("c1"), std::string::npos);
    EXPECT_NE(what.find("45"), std::string::npos);
  }
  spec = find_preset("fig2-homogeneous").spec;
  spec.block_edges[0][1] = 101;
  spec.block_edges[1][0] = 101;
  EXPECT_THROW(generate_block_network(spec), Error);
  spec = find_preset("fig2-homogeneous").spec;
  spec.block_edges[0][1] = 3;  // asymmetric
  EXPECT_THROW(spec.validate(), Error);
}

TEST(Generator, JsonSpec) {
  const auto spec = block_spec_from_json(R"({
    "group_sizes": [3, 4],
    "block_edges": [[3, 2], [2, 6]],
    "type_of_group": ["x", "y"],
    "seed": 9
  })");
  EXPECT_EQ(spec.seed, 9u);
  const auto net = generate_block_network(spec);
  EXPECT_EQ(net.graph.node_name(0), "g0_0");
  EXPECT_EQ(net.graph.num_nodes(), 7u);
  EXPECT_EQ(net.graph.num_edges(), 11u);
  EXPECT_THROW(block_spec_from_json("{\"group_sizes\": [2]}"), Error);
  EXPECT_THROW(block_spec_from_json("not json"), Error);
}

TEST(Generator, PolarizedIsBimodal) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto spec = find_preset("fig2-polarized").spec;
    spec.seed = seed;
    const auto h = build_histogram(r_multi(generate_block_network(spec)), 20);
    // Two heaviest local maxima of the z-weighted histogram.
    std::vector<std::pair<double, double>> peaks;
    for (std::size_t k = 0; k < h.mass.size(); ++k) {
      const double left = k ? h.mass[k - 1] : 0.0;
      const double right = k + 1 < h.mass.size() ? h.mass[k + 1] : 0.0;
      if (h.mass[k] > 0 && h.mass[k] >= left && h.mass[k] >= right)
        peaks.emplace_back(h.mass[k], 0.5 * (h.edges[k] + h.edges[k + 1]));
    }
    std::sort(peaks.rbegin(), peaks.rend());
    ASSERT_GE(peaks.size(), 2u);
    EXPECT_GE(std::abs(peaks[0].second - peaks[1].second), 0.5);
  }
}

TEST(Generator, HomogeneousIsNarrowest) {
  auto spread = [](const std::string& name) {
    auto spec = find_preset(name).spec;
    double total = 0;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      spec.seed = seed;
      total += summarize(r_multi(generate_block_network(spec))).std_dev;
    }
    return total / 3;
  };
  const double base = spread("fig2-homogeneous");
  for (const char* name : {"fig2-polarized", "fig2-bridged", "fig2-one-sided", "fig2-graded"})
    EXPECT_LE(base, 0.5 * spread(name)) << name;
}
