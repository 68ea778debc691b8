#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tucker/bigraph.hpp"
#include "tucker/patterns.hpp"

namespace tucker {

// A certified forbidden induced subgraph: rows and columns of G(M) whose
// induced subgraph is isomorphic to the pattern of `type`.
struct TuckerWitness {
  TuckerType type;
  std::vector<std::uint32_t> rows;  // sorted
  std::vector<std::uint32_t> cols;  // sorted

  std::size_t size() const noexcept { return rows.size() + cols.size(); }
  bool operator==(const TuckerWitness&) const = default;
};

// Deterministic preference among witnesses: smaller first, then
// lexicographic on (rows, cols).
bool witness_less(const TuckerWitness& a, const TuckerWitness& b);

// Builds a witness from an arbitrary vertex collection, classifies its
// induced subgraph and checks the classification equals `expected`.
// Throws InternalError on mismatch.
TuckerWitness certify(const BipartiteGraph& g, std::span<const Vertex> vertices, TuckerType expected);

// True when the witness' induced subgraph classifies to its declared type.
bool is_certified(const BipartiteGraph& g, const TuckerWitness& w);

enum class OutcomeStatus { Found, NotFound, Superseded };

// Result of a conditional detector. Superseded means the detector proved
// that an obstruction of one of `superseded_by` exists whose size is at most
// that of any obstruction this detector could still report.
struct DetectorOutcome {
  OutcomeStatus status = OutcomeStatus::NotFound;
  std::optional<TuckerWitness> witness;
  KindSet superseded_by;

  static DetectorOutcome found(TuckerWitness w) { return {OutcomeStatus::Found, std::move(w), {}}; }
  static DetectorOutcome not_found() { return {}; }
  static DetectorOutcome superseded(KindSet by) { return {OutcomeStatus::Superseded, std::nullopt, by}; }
};

std::string to_string(OutcomeStatus s);

}  // namespace tucker
