#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "tucker/errors.hpp"
#include "tucker/oracle.hpp"

using namespace tucker;
using namespace tucker::testing;

namespace {

const BinaryMatrix kC6{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};

}  // namespace

TEST(OracleC1P, SingleRowWithGap) { EXPECT_TRUE(oracle_c1p(BinaryMatrix{{1, 0, 1}})); }

TEST(OracleC1P, SixCycleFails) { EXPECT_FALSE(oracle_c1p(kC6)); }

TEST(OracleC1P, AllOnes) {
  BinaryMatrix m(3, 4);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 4; ++c) m.set(r, c);
  EXPECT_TRUE(oracle_c1p(m));
}

TEST(OracleC1P, EmptyAndDegenerate) {
  EXPECT_TRUE(oracle_c1p(BinaryMatrix(0, 0)));
  EXPECT_TRUE(oracle_c1p(BinaryMatrix(3, 0)));
  EXPECT_TRUE(oracle_c1p(BinaryMatrix(2, 2)));
}

TEST(OracleC1P, RefusesTooManyColumns) {
  EXPECT_THROW(oracle_c1p(BinaryMatrix(2, 10)), BoundExceeded);
  OracleBounds b;
  b.max_cols = 10;
  EXPECT_NO_THROW(oracle_c1p(BinaryMatrix(2, 10), b));
}

// Every row of a matrix with the property, read in a witnessing order, is an
// interval; checked here by trying all orders directly on 3x4 matrices.
TEST(OracleC1P, MatchesNaivePermutationScanOn3x4) {
  std::vector<int> perm{0, 1, 2, 3};
  for (std::uint64_t mask = 0; mask < (1u << 12); ++mask) {
    const BinaryMatrix m = matrix_from_mask(3, 4, mask);
    bool naive = false;
    std::sort(perm.begin(), perm.end());
    do {
      bool ok = true;
      for (std::size_t r = 0; r < 3 && ok; ++r) {
        int first = -1, last = -1, count = 0;
        for (int i = 0; i < 4; ++i) {
          if (m.get(r, perm[i])) {
            if (first < 0) first = i;
            last = i;
            ++count;
          }
        }
        ok = count == 0 || last - first + 1 == count;
      }
      naive = naive || ok;
    } while (!naive && std::next_permutation(perm.begin(), perm.end()));
    ASSERT_EQ(oracle_c1p(m), naive) << "mask " << mask;
  }
}

TEST(OracleMinObstruction, PatternVIsItsOwnMinimum) {
  const auto w = oracle_min_obstruction(pattern_matrix({TuckerKind::V, 1}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->rows, (std::vector<std::uint32_t>{0, 1, 2, 3}));
  EXPECT_EQ(w->cols, (std::vector<std::uint32_t>{0, 1, 2, 3, 4}));
  EXPECT_EQ(w->type, (TuckerType{TuckerKind::V, 1}));
}

TEST(OracleMinObstruction, SixCycleWithDuplicateRow) {
  BinaryMatrix m{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  const auto w = oracle_min_obstruction(m);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->size(), 6u);
  EXPECT_EQ(w->type, (TuckerType{TuckerKind::I, 1}));
  EXPECT_EQ(w->rows, (std::vector<std::uint32_t>{0, 1, 2}));  // least by rows
}

TEST(OracleMinObstruction, C1PHasNone) {
  EXPECT_FALSE(oracle_min_obstruction(BinaryMatrix{{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}}));
}

TEST(OracleMinObstruction, RefusesLargeInput) { EXPECT_THROW(oracle_min_obstruction(BinaryMatrix(8, 3)), BoundExceeded); }

TEST(OracleMinimal, GeneratedPatterns) {
  for (auto t : {TuckerType{TuckerKind::I, 1}, TuckerType{TuckerKind::IV, 1}, TuckerType{TuckerKind::V, 1}})
    EXPECT_TRUE(oracle_is_minimal_pattern(pattern_matrix(t))) << to_string(t);
}

TEST(OracleMinimal, RejectsC1PAndPaddedPatterns) {
  EXPECT_FALSE(oracle_is_minimal_pattern(BinaryMatrix{{1, 1, 0}, {0, 1, 1}}));
  BinaryMatrix padded{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}};
  EXPECT_FALSE(oracle_is_minimal_pattern(padded));
}

TEST(OracleByType, SeesEveryKindInABlockDiagonal) {
  const BinaryMatrix m = block_diagonal(kC6, pattern_matrix({TuckerKind::III, 1}));
  const auto per = oracle_min_by_type(m);
  EXPECT_EQ(min_size_of(per, TuckerKind::I), 6u);
  EXPECT_EQ(min_size_of(per, TuckerKind::III), 7u);
  EXPECT_FALSE(min_size_of(per, TuckerKind::IV));
  EXPECT_EQ(global_min(per), 6u);
}

// The minimum non-C1P submatrix is always a classified pattern, and it is the
// smallest of the per-kind minima.
TEST(OracleByType, AgreesWithMinObstructionOnAll3x4) {
  for (std::uint64_t mask = 0; mask < (1u << 12); ++mask) {
    const BinaryMatrix m = matrix_from_mask(3, 4, mask);
    const auto w = oracle_min_obstruction(m);
    const auto per = oracle_min_by_type(m);
    ASSERT_EQ(w.has_value(), global_min(per).has_value());
    if (w) {
      ASSERT_EQ(w->size(), *global_min(per));
    }
  }
}

// Frozen values from an independent run.
TEST(OracleFrozen, SmallCorpus) {
  EXPECT_EQ(oracle_min_obstruction(pattern_matrix({TuckerKind::II, 1}))->size(), 8u);
  EXPECT_EQ(oracle_min_obstruction(pattern_matrix({TuckerKind::III, 2}))->size(), 9u);
  EXPECT_EQ(oracle_min_obstruction(pattern_matrix({TuckerKind::IV, 1}))->size(), 10u);
  // I_2 with a chord through the middle: a C6 remains.
  BinaryMatrix c8_chord{{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}};
  c8_chord.set(0, 2);
  EXPECT_EQ(oracle_min_obstruction(c8_chord)->size(), 6u);
}
