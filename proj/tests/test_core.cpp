#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "oracles.hpp"
#include "shadowlab/combinatorics.hpp"
#include "shadowlab/constructions.hpp"
#include "shadowlab/hypergraph.hpp"
#include "shadowlab/hypergraph_io.hpp"

using namespace shadowlab;

namespace {

Hypergraph fano() { return Hypergraph(7, 3, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}, {0, 6, 3}, {1, 6, 4}, {2, 6, 5}, {1, 3, 5}}); }

std::set<Edge> as_set(const Hypergraph& h) {
  auto es = h.edges();
  return {es.begin(), es.end()};
}

}  // namespace

TEST(Hypergraph, CanonicalizesEdges) {
  Hypergraph h(5, 3, {{4, 2, 0}, {1, 0, 2}, {3, 1, 2}});
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1, 2}, {0, 2, 4}, {1, 2, 3}}));
  EXPECT_TRUE(h.contains(std::vector<Vertex>{0, 2, 4}));
  EXPECT_FALSE(h.contains(std::vector<Vertex>{0, 1, 3}));
  EXPECT_EQ(h.mask(0), Mask{0b00111});
}

TEST(Hypergraph, RejectsMalformedEdges) {
  EXPECT_THROW(Hypergraph(4, 3, {{0, 1}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph(4, 3, {{0, 1, 4}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph(4, 3, {{0, 1, 1}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph(4, 3, {{0, 1, 2}, {2, 1, 0}}), std::invalid_argument);
}

TEST(Shadow, FanoCoversAllPairs) {
  const auto s = shadow(fano(), 1);
  EXPECT_EQ(s.r(), 2);
  EXPECT_EQ(s.size(), 21u);
}

TEST(Shadow, IndexZeroIsIdentity) {
  std::mt19937_64 rng(1);
  const auto h = oracle::random_graph(6, 3, 0.4, rng);
  EXPECT_EQ(shadow(h, 0), h);
}

TEST(Shadow, CompleteFourVerticesNegativeIndex) {
  const auto s = shadow(complete(4, 3), -1);
  EXPECT_EQ(s.r(), 4);
  EXPECT_EQ(s.edges(), (std::vector<Edge>{{0, 1, 2, 3}}));
}

TEST(Shadow, RejectsBadIndices) {
  EXPECT_THROW(shadow(fano(), 3), std::invalid_argument);
  EXPECT_THROW(shadow(complete(4, 3), -2), std::invalid_argument);
}

TEST(Shadow, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 5;
    const int r = 2 + trial % 3;
    if (r > n) continue;
    const auto h = oracle::random_graph(n, r, 0.5, rng);
    for (int i = 1; i < r; ++i) EXPECT_EQ(as_set(shadow(h, i)), oracle::shadow_sets(h, r - i));
    for (int i = -1; r - i <= n; --i) EXPECT_EQ(as_set(shadow(h, i)), oracle::clique_sets(h, r - i));
  }
}

TEST(ShadowProperty, CompositionForPositiveIndices) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 5 + trial % 4;
    const int r = 3 + trial % 2;
    const auto h = oracle::random_graph(n, r, 0.3, rng);
    for (int i = 0; i <= r - 2; ++i) EXPECT_EQ(shadow(shadow(h, i), 1), shadow(h, i + 1));
  }
}

TEST(ShadowProperty, CliqueShadowContainment) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const auto h = oracle::random_graph(7, 3, 0.7, rng);
    for (int i = -1; 3 - i <= 7; --i) {
      const auto down = as_set(shadow(shadow(h, i), 1));
      const auto next = as_set(shadow(h, i + 1));
      EXPECT_TRUE(std::includes(next.begin(), next.end(), down.begin(), down.end()));
    }
  }
}

TEST(Density, ExactValues) {
  const auto t = turan(6, 3, 3);
  EXPECT_EQ(edge_density(t), Rational(2, 5));
  EXPECT_EQ(shadow_density(t), Rational(4, 5));
  EXPECT_EQ(edge_density(Hypergraph(5, 3)), Rational(0));
  EXPECT_EQ(shadow_density(Hypergraph(5, 3)), Rational(0));
  EXPECT_EQ(edge_density(complete(5, 3)), Rational(1));
  EXPECT_EQ(shadow_density(fano()), Rational(1));
  EXPECT_THROW(edge_density(Hypergraph(2, 3)), std::invalid_argument);
  EXPECT_EQ(to_string(Rational(2, 5)), "2/5");
  EXPECT_EQ(to_string(Rational(4, 4)), "1");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Link, FanoAndStar) {
  const auto f = fano();
  for (Vertex v = 0; v < 7; ++v) {
    const auto l = link(f, v);
    EXPECT_EQ(l.size(), 3u);
    std::set<Vertex> seen;
    for (const auto& e : l.edges())
      for (Vertex u : e) EXPECT_TRUE(seen.insert(u).second) << "pairs not disjoint";
    EXPECT_EQ(seen.count(v), 0u);
  }
  const auto s = star(6, 3);
  std::vector<Edge> rest;
  oracle::combos({1, 2, 3, 4, 5}, 2, [&](const auto& e) { rest.push_back(e); });
  EXPECT_EQ(link(s, 0), Hypergraph(6, 2, rest));
  EXPECT_TRUE(link(Hypergraph(5, 3), 2).empty());
  EXPECT_THROW(link(f, 7), std::out_of_range);
}

TEST(PairDegree, Examples) {
  const auto f = fano();
  for (Vertex u = 0; u < 7; ++u)
    for (Vertex v = u + 1; v < 7; ++v) EXPECT_EQ(pair_degree(f, u, v), 1);
  EXPECT_EQ(pair_degree(turan(6, 3, 3), 0, 1), 0);
  EXPECT_EQ(pair_degree(complete(5, 3), 1, 3), 3);
  EXPECT_THROW(pair_degree(f, 2, 2), std::invalid_argument);
}

TEST(Induced, Examples) {
  EXPECT_EQ(induced(complete(6, 3), std::vector<Vertex>{1, 2, 4, 5}), complete(4, 3));
  const auto line = induced(fano(), std::vector<Vertex>{2, 3, 4});
  EXPECT_EQ(line.n(), 3);
  EXPECT_EQ(line.edges(), (std::vector<Edge>{{0, 1, 2}}));
  const auto none = induced(fano(), std::vector<Vertex>{});
  EXPECT_EQ(none.n(), 0);
  EXPECT_TRUE(none.empty());
  EXPECT_THROW(induced(fano(), std::vector<Vertex>{9}), std::out_of_range);
}

TEST(Sigma, Examples) {
  const auto f = fano();
  EXPECT_EQ(sigma(f, oracle::range(7)), 21);
  EXPECT_EQ(sigma(f, std::vector<Vertex>{}), 0);
  const Hypergraph one(5, 4, {{0, 1, 3, 4}});
  EXPECT_EQ(sigma(one, std::vector<Vertex>{0, 1, 3, 4}), 4);
}

TEST(DegreeProperty, HandshakeAndPairSums) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5 + trial % 4, r = 2 + trial % 3;
    const auto h = oracle::random_graph(n, r, 0.4, rng);
    std::int64_t links = 0, pairs = 0;
    for (int v = 0; v < n; ++v) links += static_cast<std::int64_t>(link(h, v).size());
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs += pair_degree(h, u, v);
    EXPECT_EQ(links, r * static_cast<std::int64_t>(h.size()));
    EXPECT_EQ(pairs, oracle::choose(r, 2) * static_cast<std::int64_t>(h.size()));
  }
}

TEST(Combinatorics, BinomialMatchesPascal) {
  std::vector<std::vector<std::int64_t>> pascal(61, std::vector<std::int64_t>(61, 0));
  for (int n = 0; n <= 60; ++n) {
    pascal[n][0] = 1;
    for (int k = 1; k <= n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + (k < n ? pascal[n - 1][k] : 0);
  }
  for (int n = 0; n <= 60; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), pascal[n][k]) << n << " " << k;
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_THROW(binomial(200, 100), std::overflow_error);
}

TEST(Combinatorics, ColexRankIsPositionInSubsetList) {
  const auto subsets = all_subsets(9, 4);
  ASSERT_EQ(subsets.size(), 126u);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    EXPECT_EQ(colex_rank(subsets[i]), static_cast<std::int64_t>(i));
    if (i) EXPECT_LT(subsets[i - 1], subsets[i]);
  }
  EXPECT_DOUBLE_EQ(generalized_binomial(5.0, 3), 10.0);
  EXPECT_DOUBLE_EQ(generalized_binomial(2.0, 3), 0.0);
}

TEST(HypergraphIo, JsonAndTextRoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto h = oracle::random_graph(7, 3, 0.3, rng);
    const auto js = to_json(h);
    EXPECT_EQ(parse_hypergraph(js), h);
    EXPECT_EQ(to_json(parse_json(js)), js);
    const auto tx = to_text(h);
    EXPECT_EQ(parse_hypergraph(tx), h);
    EXPECT_EQ(to_text(parse_text(tx)), tx);
  }
  EXPECT_EQ(to_json(Hypergraph(3, 3, {{2, 0, 1}})), "{\"n\":3,\"r\":3,\"edges\":[[0,1,2]]}\n");
  EXPECT_EQ(to_text(Hypergraph(3, 3, {{2, 0, 1}})), "3 3\n0 1 2\n");
}

TEST(HypergraphIo, RejectsGarbage) {
  EXPECT_THROW(parse_hypergraph("{\"n\":3}"), std::invalid_argument);
  EXPECT_THROW(parse_hypergraph("{oops"), std::invalid_argument);
  EXPECT_THROW(parse_hypergraph("3 3\n0 1\n"), std::invalid_argument);
  EXPECT_THROW(parse_hypergraph("3 3\n0 1 x\n"), std::invalid_argument);
  EXPECT_THROW(read_hypergraph("/nonexistent/file.json"), std::runtime_error);
}

TEST(HypergraphIo, WritesFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "shadowlab_io_test";
  std::filesystem::create_directories(dir);
  write_hypergraph(fano(), dir / "f.txt", GraphFormat::Text);
  write_hypergraph(fano(), dir / "f.json", GraphFormat::Json);
  EXPECT_EQ(read_hypergraph(dir / "f.txt"), fano());
  EXPECT_EQ(read_hypergraph(dir / "f.json"), fano());
  std::filesystem::remove_all(dir);
}
