#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "tucker/bigraph.hpp"
#include "tucker/generators.hpp"

using namespace tucker;
using namespace tucker::testing;

namespace {

const BinaryMatrix kC6{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
const BinaryMatrix kIdentity{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
const BinaryMatrix kK22{{1, 1}, {1, 1}};

Vertex R(std::uint32_t i) { return Vertex::black(i); }
Vertex C(std::uint32_t i) { return Vertex::white(i); }

}  // namespace

TEST(BuildGraph, SixCycle) {
  const BipartiteGraph g(kC6);
  EXPECT_EQ(g.edge_count(), 6u);
  for (std::uint32_t v = 0; v < 3; ++v) {
    EXPECT_EQ(g.degree(R(v)), 2u);
    EXPECT_EQ(g.degree(C(v)), 2u);
  }
  EXPECT_TRUE(g.adjacent(R(0), C(1)));
  EXPECT_TRUE(g.adjacent(C(1), R(0)));
  EXPECT_FALSE(g.adjacent(R(0), C(2)));
  EXPECT_FALSE(g.adjacent(R(0), R(1)));
}

TEST(BuildGraph, MatchingAndComplete) {
  EXPECT_EQ(BipartiteGraph(kIdentity).edge_count(), 3u);
  const BipartiteGraph k(kK22);
  EXPECT_EQ(k.edge_count(), 4u);
  EXPECT_EQ(std::vector<std::uint32_t>(k.col_neighbors(1).begin(), k.col_neighbors(1).end()),
            (std::vector<std::uint32_t>{0, 1}));
}

TEST(BuildGraph, AdjacencySymmetricOnRandom) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto m = random_matrix(7, 9, 0.3, seed);
    const BipartiteGraph g(m);
    std::size_t edges = 0;
    for (std::uint32_t r = 0; r < 7; ++r) {
      for (auto c : g.row_neighbors(r)) {
        ++edges;
        const auto back = g.col_neighbors(c);
        ASSERT_TRUE(std::binary_search(back.begin(), back.end(), r));
        ASSERT_TRUE(m.get(r, c));
      }
    }
    ASSERT_EQ(edges, stats(m).ones);
  }
}

TEST(Neighborhoods, SixCycleLayers) {
  const BipartiteGraph g(kC6);
  const auto layers = neighborhoods(g, C(0), VertexMask::all(g));
  ASSERT_EQ(layers.size(), 3u);
  EXPECT_EQ(layers[0], (std::vector<Vertex>{R(0), R(2)}));
  EXPECT_EQ(layers[1], (std::vector<Vertex>{C(1), C(2)}));
  EXPECT_EQ(layers[2], (std::vector<Vertex>{R(1)}));
}

TEST(Neighborhoods, MatchingAndComplete) {
  const BipartiteGraph m(kIdentity);
  const auto lm = neighborhoods(m, C(0), VertexMask::all(m));
  ASSERT_EQ(lm.size(), 1u);
  EXPECT_EQ(lm[0], (std::vector<Vertex>{R(0)}));
  const BipartiteGraph k(kK22);
  const auto lk = neighborhoods(k, C(0), VertexMask::all(k));
  ASSERT_EQ(lk.size(), 2u);
  EXPECT_EQ(lk[1], (std::vector<Vertex>{C(1)}));
}

TEST(Neighborhoods, LayersPartitionTheComponent) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const BipartiteGraph g(random_matrix(6, 7, 0.25, seed));
    const auto layers = neighborhoods(g, C(0), VertexMask::all(g));
    std::vector<Vertex> seen{C(0)};
    for (const auto& l : layers) seen.insert(seen.end(), l.begin(), l.end());
    std::sort(seen.begin(), seen.end());
    ASSERT_TRUE(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    // Component by closure.
    std::vector<Vertex> comp{C(0)};
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (auto nb : g.neighbors(comp[i])) {
        const Vertex v{opposite(comp[i].side), nb};
        if (std::find(comp.begin(), comp.end(), v) == comp.end()) comp.push_back(v);
      }
    std::sort(comp.begin(), comp.end());
    ASSERT_EQ(seen, comp);
  }
}

TEST(ShortestPath, SixCycle) {
  const BipartiteGraph g(kC6);
  VertexSet targets = VertexSet::none(g);
  targets.insert(C(2));
  auto p = shortest_path(g, C(0), targets, VertexMask::all(g));
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, (Path{C(0), R(2), C(2)}));

  VertexMask mask = VertexMask::all(g);
  mask.erase(R(2));
  p = shortest_path(g, C(0), targets, mask);
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, (Path{C(0), R(0), C(1), R(1), C(2)}));
}

TEST(ShortestPath, Disconnected) {
  const BipartiteGraph g(kIdentity);
  VertexSet targets = VertexSet::none(g);
  targets.insert(C(2));
  EXPECT_FALSE(shortest_path(g, C(0), targets, VertexMask::all(g)));
  EXPECT_FALSE(shortest_path(g, C(0), VertexSet::none(g), VertexMask::all(g)));
}

TEST(ShortestPath, LengthMatchesLayerIndex) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const BipartiteGraph g(random_matrix(6, 6, 0.3, seed));
    const auto layers = neighborhoods(g, C(0), VertexMask::all(g));
    for (std::size_t i = 0; i < layers.size(); ++i) {
      for (Vertex t : layers[i]) {
        VertexSet targets = VertexSet::none(g);
        targets.insert(t);
        const auto p = shortest_path(g, C(0), targets, VertexMask::all(g));
        ASSERT_TRUE(p);
        ASSERT_EQ(p->size(), i + 2);
      }
    }
  }
}

TEST(InducedSubgraph, Restrictions) {
  const BipartiteGraph g(kC6);
  const Vertex five[] = {R(0), R(1), R(2), C(0), C(1)};
  EXPECT_EQ(stats(induced_subgraph(g, five).matrix).ones, 4u);  // a path
  const BipartiteGraph k(kK22);
  const Vertex three[] = {R(0), R(1), C(0)};
  const auto sub = induced_subgraph(k, three);
  EXPECT_EQ(sub.rows, (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(sub.cols, (std::vector<std::uint32_t>{0}));
  EXPECT_EQ(stats(sub.matrix).ones, 2u);
}

TEST(InducedMatching, DisjointEdges) {
  const BipartiteGraph g(BinaryMatrix{{1, 0}, {0, 1}});
  const auto hit = induced_matching_size_two(g, VertexMask::all(g), Side::Black);
  ASSERT_TRUE(hit);
  EXPECT_NE(hit->first.row, hit->second.row);
}

TEST(InducedMatching, CompleteBipartiteHasNone) {
  const BipartiteGraph g(kK22);
  EXPECT_FALSE(induced_matching_size_two(g, VertexMask::all(g), Side::Black));
  EXPECT_FALSE(induced_matching_size_two(g, VertexMask::all(g), Side::White));
}

TEST(InducedMatching, AgreesWithAllPairsOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const std::size_t m = 1 + seed % 8, n = 1 + (seed / 8) % 8;
    const BipartiteGraph g(random_matrix(m, n, 0.2 + 0.1 * (seed % 6), seed));
    VertexMask mask = VertexMask::all(g);
    if (seed % 3 == 0) mask.erase(Vertex::black(0));
    for (Side side : {Side::Black, Side::White}) {
      const auto hit = induced_matching_size_two(g, mask, side);
      ASSERT_EQ(hit.has_value(), brute_induced_matching(g, mask, side)) << "seed " << seed;
      if (!hit) continue;
      const auto [e1, e2] = *hit;
      ASSERT_TRUE(g.adjacent(e1.row, e1.col) && g.adjacent(e2.row, e2.col));
      ASSERT_FALSE(g.adjacent(e1.row, e2.col) || g.adjacent(e2.row, e1.col));
      ASSERT_TRUE(e1.row != e2.row && e1.col != e2.col);
      for (const Edge& e : {e1, e2})
        ASSERT_TRUE(mask.contains(Vertex::black(e.row)) && mask.contains(Vertex::white(e.col)));
    }
  }
}

// Not-found means the masked neighbourhoods of the chosen side are a chain.
TEST(InducedMatching, NotFoundImpliesNestedNeighbourhoods) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const BipartiteGraph g(random_matrix(5, 5, 0.6, seed));
    const auto mask = VertexMask::all(g);
    if (induced_matching_size_two(g, mask, Side::Black)) continue;
    for (std::uint32_t a = 0; a < 5; ++a)
      for (std::uint32_t b = 0; b < 5; ++b) {
        bool a_in_b = true, b_in_a = true;
        for (std::uint32_t c = 0; c < 5; ++c) {
          if (g.adjacent(a, c) && !g.adjacent(b, c)) a_in_b = false;
          if (g.adjacent(b, c) && !g.adjacent(a, c)) b_in_a = false;
        }
        ASSERT_TRUE(a_in_b || b_in_a);
      }
  }
}
