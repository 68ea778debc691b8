#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tucker/bigraph.hpp"
#include "tucker/detectors.hpp"
#include "tucker/patterns.hpp"

namespace tucker {

// Three columns u < v < w and shortest paths between each pair that avoid
// the neighbourhood of the third.
struct AsteroidalTriple {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  std::uint32_t w = 0;
  Path path_uv;  // avoids N(w)
  Path path_vw;  // avoids N(u)
  Path path_uw;  // avoids N(v)
  std::size_t ell = 0;  // total edge count of the three paths
};

// Triple minimising ell, lexicographically smallest (u, v, w) among ties.
// Absent iff the matrix has the consecutive ones property.
// O(n^2 e + n^3) time, n^3 16-bit table.
std::optional<AsteroidalTriple> find_min_triple(const BipartiteGraph& g, const DetectorOptions& opts = {});

struct TripleSpan {
  std::vector<Vertex> vertices;  // sorted, rows first
  TuckerType type;
};

// Union of the three paths with its classification. Throws InternalError
// when the span is not a Tucker pattern.
TripleSpan triple_span(const BipartiteGraph& g, const AsteroidalTriple& a);

}  // namespace tucker
