#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "tucker/matrix.hpp"
#include "tucker/witness.hpp"

namespace tucker {

// Brute-force ground truth. Exponential; every entry point refuses inputs
// beyond its bound with BoundExceeded.
struct OracleBounds {
  std::size_t max_cols = 9;    // permutation search in oracle_c1p
  std::size_t max_dim = 7;     // m and n for the subset enumerations
};

// Column-permutation search with row-state pruning and memoisation.
bool oracle_c1p(const BinaryMatrix& m, const OracleBounds& bounds = {});

// Smallest non-C1P submatrix, least by (size, rows, cols). Its type comes
// from classify; nullopt iff m has the property.
std::optional<TuckerWitness> oracle_min_obstruction(const BinaryMatrix& m, const OracleBounds& bounds = {});

// Non-C1P, and deleting any single row or column gives a C1P matrix.
bool oracle_is_minimal_pattern(const BinaryMatrix& m, const OracleBounds& bounds = {});

// For each kind, the least submatrix isomorphic to a pattern of that kind.
// Indexed by static_cast<int>(kind) - 1.
using PerKindMinimum = std::array<std::optional<TuckerWitness>, 5>;
PerKindMinimum oracle_min_by_type(const BinaryMatrix& m, const OracleBounds& bounds = {});

}  // namespace tucker
