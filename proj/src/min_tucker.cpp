#include "tucker/min_tucker.hpp"

#include <limits>

namespace tucker {

namespace {

struct Candidate {
  std::optional<TuckerWitness> witness;
  std::string detector;
};

Candidate from_outcome(DetectorOutcome out, const char* name) {
  return {out.status == OutcomeStatus::Found ? std::move(out.witness) : std::nullopt, name};
}

}  // namespace

std::optional<MinTuckerResult> find_min_tucker(const BipartiteGraph& g, const SearchOptions& opts) {
  const DetectorOptions dopts{opts.workers};
  auto triple = find_min_triple(g, dopts);
  if (!triple) return std::nullopt;

  Candidate cands[3];
  if (opts.mode == SearchMode::Exact) {
    cands[0] = {find_min_type3(g, dopts), "type3"};
    cands[1] = {find_type4(g, dopts), "type4"};
    cands[2] = {find_type5(g, dopts), "type5"};
  } else {
    cands[0] = from_outcome(find_type3_conditional(g, dopts), "type3_conditional");
    cands[1] = from_outcome(find_type4_conditional(g, dopts), "type4_conditional");
    cands[2] = from_outcome(find_type5_conditional(g, dopts), "type5_conditional");
  }

  std::size_t best = triple->ell;
  Candidate* pick = nullptr;
  for (auto& c : cands) {
    if (c.witness && c.witness->size() < best) {
      best = c.witness->size();
      pick = &c;
    }
  }
  if (pick) return MinTuckerResult{std::move(*pick->witness), pick->detector, triple->ell};

  TripleSpan span = triple_span(g, *triple);
  return MinTuckerResult{certify(g, span.vertices, span.type), "triple", triple->ell};
}

C1PResult check_c1p(const BinaryMatrix& m, const SearchOptions& opts) {
  const Normalization norm = normalize(m);
  if (norm.trivially_c1p()) return {};
  const BipartiteGraph g(norm.matrix);
  auto found = find_min_tucker(g, opts);
  if (!found) return {};
  for (auto& r : found->witness.rows) r = norm.row_origin[r];
  for (auto& c : found->witness.cols) c = norm.col_origin[c];
  return {false, std::move(found)};
}

std::string to_string(SearchMode mode) { return mode == SearchMode::Exact ? "exact" : "conditional"; }

}  // namespace tucker
