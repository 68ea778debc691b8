#pragma once

// Shared brute-force helpers for the test binaries. Nothing here reuses the
// library's search code beyond the data structures.

#include <cstdint>
#include <optional>
#include <vector>

#include "tucker/bigraph.hpp"
#include "tucker/matrix.hpp"
#include "tucker/oracle.hpp"
#include "tucker/patterns.hpp"

namespace tucker::testing {

// Bit r*n + c of mask is entry (r, c).
BinaryMatrix matrix_from_mask(std::size_t m, std::size_t n, std::uint64_t mask);

BinaryMatrix block_diagonal(const BinaryMatrix& a, const BinaryMatrix& b);

// I and III for k <= 5, II for k <= 3, IV, V.
std::vector<TuckerType> test_patterns();

// All pairs of edges inside the mask with both U endpoints distinct and no
// cross edges.
bool brute_induced_matching(const BipartiteGraph& g, const VertexMask& mask, Side u_side);

// Minimum over column triples of the sum of the three avoiding distances,
// computed with a plain queue BFS per (avoid, source).
std::optional<std::size_t> brute_min_ell(const BipartiteGraph& g);

// Size of the oracle's smallest pattern of the given kind.
std::optional<std::size_t> min_size_of(const PerKindMinimum& per, TuckerKind kind);
std::optional<std::size_t> global_min(const PerKindMinimum& per);

}  // namespace tucker::testing
