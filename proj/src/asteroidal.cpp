#include "tucker/asteroidal.hpp"

#include <algorithm>
#include <limits>

#include "parallel.hpp"
#include "tucker/errors.hpp"

namespace tucker {

namespace {

constexpr std::uint16_t kFar = std::numeric_limits<std::uint16_t>::max();

// Rows adjacent to `avoid` are closed; so is `avoid` itself.
struct AvoidMask {
  const BipartiteGraph* g;
  std::uint32_t avoid;
  bool operator()(std::uint32_t id) const {
    const auto m = static_cast<std::uint32_t>(g->black_count());
    if (id < m) return !g->adjacent(id, avoid);
    return id - m != avoid;
  }
};

Path avoiding_path(const BipartiteGraph& g, BfsWorkspace& bfs, std::uint32_t from, std::uint32_t to,
                   std::uint32_t avoid) {
  const auto m = static_cast<std::uint32_t>(g.black_count());
  const auto hit = bfs.search(m + from, AvoidMask{&g, avoid}, [&](std::uint32_t id) { return id == m + to; });
  if (!hit) throw InternalError("asteroidal path vanished during reconstruction");
  return bfs.path_to(*hit);
}

}  // namespace

std::optional<AsteroidalTriple> find_min_triple(const BipartiteGraph& g, const DetectorOptions& opts) {
  const std::size_t n = g.white_count();
  const auto m = static_cast<std::uint32_t>(g.black_count());
  if (n < 3) return std::nullopt;
  if (g.vertex_count() >= kFar) throw InvalidArgument("graph too large for the 16-bit distance table");

  // dist[(w * n + u) * n + v]: length of a shortest u-v path avoiding N(w).
  std::vector<std::uint16_t> dist(n * n * n, kFar);
  detail::for_each_index(
      n, opts.workers, [&] { return BfsWorkspace(g); },
      [&](BfsWorkspace& bfs, std::size_t wi) {
        const auto w = static_cast<std::uint32_t>(wi);
        std::uint16_t* slab = dist.data() + wi * n * n;
        for (std::uint32_t u = 0; u < n; ++u) {
          if (u == w) continue;
          bfs.explore(m + u, AvoidMask{&g, w});
          for (std::uint32_t id : bfs.order()) {
            if (id >= m) slab[u * n + (id - m)] = static_cast<std::uint16_t>(bfs.distance(id));
          }
        }
      });

  auto d = [&](std::size_t avoid, std::size_t a, std::size_t b) { return dist[(avoid * n + a) * n + b]; };
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::uint32_t bu = 0, bv = 0, bw = 0;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      for (std::uint32_t w = v + 1; w < n; ++w) {
        const std::uint16_t uv = d(w, u, v), vw = d(u, v, w), uw = d(v, u, w);
        if (uv == kFar || vw == kFar || uw == kFar) continue;
        const std::size_t total = std::size_t{uv} + vw + uw;
        if (total < best) {
          best = total;
          bu = u, bv = v, bw = w;
        }
      }
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;

  BfsWorkspace bfs(g);
  AsteroidalTriple t;
  t.u = bu;
  t.v = bv;
  t.w = bw;
  t.path_uv = avoiding_path(g, bfs, bu, bv, bw);
  t.path_vw = avoiding_path(g, bfs, bv, bw, bu);
  t.path_uw = avoiding_path(g, bfs, bu, bw, bv);
  t.ell = best;
  return t;
}

TripleSpan triple_span(const BipartiteGraph& g, const AsteroidalTriple& a) {
  TripleSpan span;
  for (const Path* p : {&a.path_uv, &a.path_vw, &a.path_uw}) span.vertices.insert(span.vertices.end(), p->begin(), p->end());
  std::sort(span.vertices.begin(), span.vertices.end());
  span.vertices.erase(std::unique(span.vertices.begin(), span.vertices.end()), span.vertices.end());
  const InducedSubgraph sub = induced_subgraph(g, span.vertices);
  const auto type = classify(sub.matrix);
  if (!type) {
    throw InternalError("asteroidal triple span with " + std::to_string(span.vertices.size()) +
                        " vertices is not a Tucker pattern");
  }
  span.type = *type;
  return span;
}

}  // namespace tucker
