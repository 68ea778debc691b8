#include "tucker/witness.hpp"

#include <algorithm>
#include <tuple>

#include "tucker/errors.hpp"

namespace tucker {

bool witness_less(const TuckerWitness& a, const TuckerWitness& b) {
  return std::forward_as_tuple(a.size(), a.rows, a.cols) < std::forward_as_tuple(b.size(), b.rows, b.cols);
}

TuckerWitness certify(const BipartiteGraph& g, std::span<const Vertex> vertices, TuckerType expected) {
  InducedSubgraph sub = induced_subgraph(g, vertices);
  const auto type = classify(sub.matrix);
  if (!type || !(*type == expected)) {
    throw InternalError("witness failed certification: expected " + to_string(expected) + ", induced subgraph is " +
                        (type ? to_string(*type) : std::string("not a Tucker pattern")));
  }
  return TuckerWitness{*type, std::move(sub.rows), std::move(sub.cols)};
}

bool is_certified(const BipartiteGraph& g, const TuckerWitness& w) {
  const auto type = classify(g.matrix().submatrix(w.rows, w.cols));
  return type && *type == w.type;
}

std::string to_string(OutcomeStatus s) {
  switch (s) {
    case OutcomeStatus::Found: return "found";
    case OutcomeStatus::NotFound: return "not-found";
    case OutcomeStatus::Superseded: return "superseded";
  }
  return "?";
}

}  // namespace tucker
