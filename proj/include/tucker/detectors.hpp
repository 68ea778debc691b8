#pragma once

#include <optional>

#include "tucker/bigraph.hpp"
#include "tucker/witness.hpp"

namespace tucker {

struct DetectorOptions {
  int workers = 1;  // outer-loop threads; results do not depend on it
};

// Exact per-type detectors. All expect G built from a normalized matrix and
// return certified witnesses.

// Smallest chordless cycle of length >= 6. O(Delta e^2).
std::optional<TuckerWitness> find_min_type1(const BipartiteGraph& g, const DetectorOptions& opts = {});

// Smallest III_k. O(e^3).
std::optional<TuckerWitness> find_min_type3(const BipartiteGraph& g, const DetectorOptions& opts = {});

// Some IV, first in row order. O(m^3 e).
std::optional<TuckerWitness> find_type4(const BipartiteGraph& g, const DetectorOptions& opts = {});

// Some V, first in row order. O(m^3 e).
std::optional<TuckerWitness> find_type5(const BipartiteGraph& g, const DetectorOptions& opts = {});

// Conditional detectors used by the global search. Each is guaranteed to
// return a smallest obstruction of its type when that type is strictly the
// smallest in G; otherwise it may report which smaller types exist.

// III: phase 1 finds III_1 via induced matchings, phase 2 runs the layered
// search for III_k, k >= 2. O(n e^2).
DetectorOutcome find_type3_conditional(const BipartiteGraph& g, const DetectorOptions& opts = {});

// IV over white triples with the cross-edge case analysis. O(n^3 e).
DetectorOutcome find_type4_conditional(const BipartiteGraph& g, const DetectorOptions& opts = {});

// V over white triples. O(n^3 e).
DetectorOutcome find_type5_conditional(const BipartiteGraph& g, const DetectorOptions& opts = {});

// Cross edges between {a,b,c} and {u,v,w} in the ten-vertex spider
// configuration (legs x-a-u-d, y-b-v-d, z-c-w-d).
enum class CrossEdgeCase { None, Single, MeetLeft, MeetRight, TwoDisjoint, ThreeDisjoint };

// present[i][j]: left vertex i (a,b,c) adjacent to right vertex j (u,v,w),
// i != j.
CrossEdgeCase classify_cross_edges(const bool present[3][3]);

// The smaller types the case guarantees: {} for None, {I} for three
// disjoint edges, {III} otherwise.
KindSet cross_edge_consequence(CrossEdgeCase c);

}  // namespace tucker
