#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "tucker/generators.hpp"
#include "tucker/min_tucker.hpp"
#include "tucker/oracle.hpp"

using namespace tucker;
using namespace tucker::testing;

TEST(FindMin, SixCycleViaTriple) {
  const auto r = find_min_tucker(BipartiteGraph(pattern_matrix({TuckerKind::I, 1})));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->witness.type, (TuckerType{TuckerKind::I, 1}));
  EXPECT_EQ(r->detector, "triple");
  EXPECT_EQ(r->ell, 6u);
}

TEST(FindMin, PatternVViaDetector) {
  const auto r = find_min_tucker(BipartiteGraph(pattern_matrix({TuckerKind::V, 1})));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->witness.type, (TuckerType{TuckerKind::V, 1}));
  EXPECT_EQ(r->witness.size(), 9u);
  EXPECT_EQ(r->ell, 10u);
}

// IV and C10 tie at ten vertices; the triple branch wins ties.
TEST(FindMin, TieGoesToTriple) {
  const auto m = block_diagonal(pattern_matrix({TuckerKind::IV, 1}), pattern_matrix({TuckerKind::I, 3}));
  const auto r = find_min_tucker(BipartiteGraph(m));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->witness.size(), 10u);
  EXPECT_EQ(r->detector, "triple");
  EXPECT_EQ(r->witness.type, (TuckerType{TuckerKind::I, 3}));
}

TEST(CheckC1P, Staircase) {
  EXPECT_TRUE(check_c1p(BinaryMatrix{{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}}).c1p);
}

TEST(CheckC1P, ClawHasSevenVertexWitness) {
  const auto r = check_c1p(pattern_matrix({TuckerKind::III, 1}));
  EXPECT_FALSE(r.c1p);
  ASSERT_TRUE(r.obstruction);
  EXPECT_EQ(r.obstruction->witness.size(), 7u);
}

TEST(CheckC1P, EmptyAfterNormalization) {
  EXPECT_TRUE(check_c1p(BinaryMatrix(3, 3)).c1p);
  EXPECT_TRUE(check_c1p(BinaryMatrix(0, 0)).c1p);
}

TEST(CheckC1P, WitnessUsesInputIndices) {
  // C6 on rows 1, 2, 4 and columns 0, 2, 3, with zero lines in between.
  BinaryMatrix m(5, 4);
  m.set(1, 0), m.set(1, 2);
  m.set(2, 2), m.set(2, 3);
  m.set(4, 0), m.set(4, 3);
  const auto r = check_c1p(m);
  ASSERT_FALSE(r.c1p);
  EXPECT_EQ(r.obstruction->witness.rows, (std::vector<std::uint32_t>{1, 2, 4}));
  EXPECT_EQ(r.obstruction->witness.cols, (std::vector<std::uint32_t>{0, 2, 3}));
}

TEST(FindMin, EveryPatternIsItsOwnMinimum) {
  for (auto t : test_patterns()) {
    const auto m = pattern_matrix(t);
    for (auto mode : {SearchMode::Conditional, SearchMode::Exact}) {
      const auto r = find_min_tucker(BipartiteGraph(m), {1, mode});
      ASSERT_TRUE(r);
      EXPECT_EQ(r->witness.size(), pattern_size(t)) << to_string(t);
      EXPECT_EQ(r->witness.type, t);
    }
  }
}

TEST(CheckC1P, AgreesWithOracleOnRandomMatrices) {
  for (std::uint64_t seed = 0; seed < 1500; ++seed) {
    const std::size_t m = 2 + seed % 6, n = 2 + (seed / 6) % 6;
    const auto mat = random_matrix(m, n, 0.2 + 0.2 * static_cast<double>(seed % 3), seed);
    const auto got = check_c1p(mat);
    const auto want = oracle_min_obstruction(mat);
    ASSERT_EQ(got.c1p, !want.has_value()) << seed;
    if (want) {
      ASSERT_EQ(got.obstruction->witness.size(), want->size()) << seed;
      ASSERT_TRUE(is_certified(BipartiteGraph(mat), got.obstruction->witness));
    }
  }
}

TEST(CheckC1P, AgreesWithOracleOnSevenBySeven) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto mat = random_matrix(7, 7, 0.25 + 0.05 * static_cast<double>(seed % 5), seed + 4242);
    const auto got = check_c1p(mat);
    const auto want = oracle_min_obstruction(mat);
    ASSERT_EQ(got.c1p, !want.has_value()) << seed;
    if (want) {
      ASSERT_EQ(got.obstruction->witness.size(), want->size()) << seed;
    }
  }
}

TEST(FindMin, ExactAndConditionalModesAgreeOnSize) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto norm = normalize(random_matrix(12, 12, 0.2 + 0.05 * static_cast<double>(seed % 4), seed));
    if (norm.trivially_c1p()) continue;
    const BipartiteGraph g(norm.matrix);
    const auto a = find_min_tucker(g, {1, SearchMode::Conditional});
    const auto b = find_min_tucker(g, {1, SearchMode::Exact});
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) {
      ASSERT_EQ(a->witness.size(), b->witness.size()) << seed;
    }
  }
}

// If the global minimum is of type I or II, the triple's ell is its size.
TEST(FindMin, CycleLikeMinimumEqualsEll) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto norm = normalize(random_matrix(6, 6, 0.35, seed));
    if (norm.trivially_c1p()) continue;
    const BipartiteGraph g(norm.matrix);
    const auto r = find_min_tucker(g);
    if (!r) continue;
    const auto kind = r->witness.type.kind;
    if (kind == TuckerKind::I || kind == TuckerKind::II) {
      ASSERT_EQ(r->witness.size(), *r->ell);
    }
  }
}

// Deleting the witness rows cannot expose anything smaller than before.
TEST(FindMin, RemovingWitnessRowsNeverShrinks) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto mat = random_matrix(10, 10, 0.3, seed);
    const auto r = check_c1p(mat);
    if (r.c1p) continue;
    std::vector<std::uint32_t> keep, cols;
    for (std::uint32_t i = 0; i < mat.rows(); ++i)
      if (!std::binary_search(r.obstruction->witness.rows.begin(), r.obstruction->witness.rows.end(), i))
        keep.push_back(i);
    for (std::uint32_t c = 0; c < mat.cols(); ++c) cols.push_back(c);
    const auto again = check_c1p(mat.submatrix(keep, cols));
    if (!again.c1p) {
      ASSERT_GE(again.obstruction->witness.size(), r.obstruction->witness.size());
    }
  }
}

TEST(FindMin, WorkerCountDoesNotChangeWitness) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto mat = random_matrix(16, 16, 0.2, seed);
    const auto a = check_c1p(mat, {1, SearchMode::Conditional});
    const auto b = check_c1p(mat, {4, SearchMode::Conditional});
    ASSERT_EQ(a.c1p, b.c1p);
    if (!a.c1p) {
      ASSERT_EQ(a.obstruction->witness, b.obstruction->witness);
      ASSERT_EQ(a.obstruction->detector, b.obstruction->detector);
    }
  }
}
