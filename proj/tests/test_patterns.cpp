#include <gtest/gtest.h>

#include "support.hpp"
#include "tucker/errors.hpp"
#include "tucker/oracle.hpp"
#include "tucker/patterns.hpp"

using namespace tucker;
using namespace tucker::testing;

using Rows = std::vector<std::vector<int>>;

TEST(Generate, SixCycle) {
  EXPECT_EQ(pattern_matrix({TuckerKind::I, 1}).to_rows(), (Rows{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
}

TEST(Generate, ClawIII1) {
  // rows w, u1, u2 over columns x, y, z, v1 ... reordered to the textbook form
  const auto m = pattern_matrix({TuckerKind::III, 1});
  EXPECT_EQ(m.rows(), 3u);
  EXPECT_EQ(m.cols(), 4u);
  EXPECT_EQ(classify(BinaryMatrix{{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}), (TuckerType{TuckerKind::III, 1}));
}

TEST(Generate, IVExact) {
  EXPECT_EQ(pattern_matrix({TuckerKind::IV, 1}).to_rows(),
            (Rows{{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}, {0, 1, 0, 1, 0, 1}}));
}

TEST(Generate, VExact) {
  EXPECT_EQ(pattern_matrix({TuckerKind::V, 1}).to_rows(),
            (Rows{{1, 1, 1, 0, 0}, {0, 1, 1, 1, 1}, {0, 0, 1, 0, 1}, {0, 1, 0, 1, 0}}));
}

TEST(Generate, IIShape) {
  for (int k = 1; k <= 4; ++k) {
    const auto m = pattern_matrix({TuckerKind::II, k});
    EXPECT_EQ(m.rows(), static_cast<std::size_t>(k + 3));
    EXPECT_EQ(m.cols(), static_cast<std::size_t>(k + 3));
    EXPECT_EQ(stats(m).ones, static_cast<std::size_t>(4 * k + 6));
  }
}

TEST(Generate, RejectsBadParameters) {
  EXPECT_THROW(generate({TuckerKind::I, 0}), InvalidArgument);
  EXPECT_THROW(generate({TuckerKind::IV, 2}), InvalidArgument);
  EXPECT_THROW(generate({TuckerKind::V, 0}), InvalidArgument);
}

TEST(PatternSize, Counts) {
  EXPECT_EQ(pattern_size({TuckerKind::I, 1}), 6u);
  EXPECT_EQ(pattern_size({TuckerKind::I, 3}), 10u);
  EXPECT_EQ(pattern_size({TuckerKind::II, 1}), 8u);
  EXPECT_EQ(pattern_size({TuckerKind::III, 2}), 9u);
  EXPECT_EQ(pattern_size({TuckerKind::IV, 1}), 10u);
  EXPECT_EQ(pattern_size({TuckerKind::V, 1}), 9u);
  for (auto t : test_patterns()) {
    const auto m = pattern_matrix(t);
    EXPECT_EQ(m.rows() + m.cols(), pattern_size(t)) << to_string(t);
  }
}

TEST(Classify, RoundTrip) {
  for (auto t : test_patterns()) EXPECT_EQ(classify(pattern_matrix(t)), t) << to_string(t);
}

TEST(Classify, InvariantUnderShuffles) {
  for (auto t : test_patterns()) {
    const auto m = pattern_matrix(t);
    std::vector<std::uint32_t> rows(m.rows()), cols(m.cols());
    for (std::uint32_t i = 0; i < rows.size(); ++i) rows[i] = static_cast<std::uint32_t>(rows.size() - 1 - i);
    for (std::uint32_t i = 0; i < cols.size(); ++i) cols[i] = static_cast<std::uint32_t>((i + 2) % cols.size());
    std::swap(cols.front(), cols.back());
    EXPECT_EQ(classify(m.submatrix(rows, cols)), t) << to_string(t);
  }
}

TEST(Classify, ChordedSixCycleIsNothing) {
  EXPECT_FALSE(classify(BinaryMatrix{{1, 1, 1}, {0, 1, 1}, {1, 0, 1}}));
}

// A transposed pattern classifies only when the transpose is itself a
// minimal non-C1P matrix; cycles always are, claws never.
TEST(Classify, RespectsSides) {
  OracleBounds b;
  b.max_cols = 12;
  for (auto t : test_patterns()) {
    const auto tr = pattern_matrix(t).transposed();
    const auto got = classify(tr);
    EXPECT_EQ(got.has_value(), oracle_is_minimal_pattern(tr, b)) << to_string(t);
    if (t.kind == TuckerKind::I) {
      EXPECT_EQ(got, t);
    }
    if (t.kind == TuckerKind::III) {
      EXPECT_FALSE(got) << to_string(t);
    }
  }
}

TEST(Classify, ExhaustiveSmallMatricesMatchOracleMinimality) {
  // Every 3x3 and 3x4 matrix: classified exactly when it is a minimal
  // non-C1P matrix (those sizes admit only I_1 and III_1).
  for (auto [m, n] : {std::pair{3, 3}, std::pair{3, 4}}) {
    for (std::uint64_t mask = 0; mask < (1u << (m * n)); ++mask) {
      const auto mat = matrix_from_mask(m, n, mask);
      ASSERT_EQ(classify(mat).has_value(), oracle_is_minimal_pattern(mat)) << mask;
    }
  }
}

TEST(Minimality, EveryGeneratedPattern) {
  OracleBounds b;
  b.max_cols = 12;
  for (auto t : test_patterns()) EXPECT_TRUE(oracle_is_minimal_pattern(pattern_matrix(t), b)) << to_string(t);
}

TEST(Names, ParseAndPrint) {
  EXPECT_EQ(parse_kind("IV"), TuckerKind::IV);
  EXPECT_FALSE(parse_kind("VI"));
  EXPECT_EQ(to_string(TuckerType{TuckerKind::III, 2}), "III_2");
  EXPECT_EQ(to_string(TuckerType{TuckerKind::V, 1}), "V");
  KindSet s{TuckerKind::I, TuckerKind::III};
  EXPECT_TRUE(s.contains(TuckerKind::III));
  EXPECT_FALSE(s.contains(TuckerKind::V));
  EXPECT_EQ(KindSet::from_bits(s.bits()), s);
}
