#pragma once

#include <optional>
#include <string>

#include "tucker/asteroidal.hpp"
#include "tucker/detectors.hpp"
#include "tucker/matrix.hpp"
#include "tucker/witness.hpp"

namespace tucker {

enum class SearchMode { Conditional, Exact };

struct SearchOptions {
  int workers = 1;
  SearchMode mode = SearchMode::Conditional;
};

struct MinTuckerResult {
  TuckerWitness witness;
  std::string detector;  // "triple", "type3_conditional", "type4", ...
  std::optional<std::size_t> ell;  // path sum of the minimum triple
};

// Smallest forbidden subgraph of G, or nullopt when G(M) has the consecutive
// ones property. The triple is compared by ell against the detector sizes;
// ties go to the triple, then III, IV, V.
std::optional<MinTuckerResult> find_min_tucker(const BipartiteGraph& g, const SearchOptions& opts = {});

struct C1PResult {
  bool c1p = true;
  std::optional<MinTuckerResult> obstruction;  // indices refer to the input matrix
};

// Normalizes, searches, and maps the witness back to input coordinates.
C1PResult check_c1p(const BinaryMatrix& m, const SearchOptions& opts = {});

std::string to_string(SearchMode mode);

}  // namespace tucker
