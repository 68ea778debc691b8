#include "support.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace tucker::testing {

BinaryMatrix matrix_from_mask(std::size_t m, std::size_t n, std::uint64_t mask) {
  BinaryMatrix out(m, n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (mask >> (r * n + c) & 1u) out.set(r, c);
  return out;
}

BinaryMatrix block_diagonal(const BinaryMatrix& a, const BinaryMatrix& b) {
  BinaryMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a.get(r, c)) out.set(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (b.get(r, c)) out.set(a.rows() + r, a.cols() + c);
  return out;
}

std::vector<TuckerType> test_patterns() {
  std::vector<TuckerType> out;
  for (int k = 1; k <= 5; ++k) out.push_back({TuckerKind::I, k});
  for (int k = 1; k <= 3; ++k) out.push_back({TuckerKind::II, k});
  for (int k = 1; k <= 5; ++k) out.push_back({TuckerKind::III, k});
  out.push_back({TuckerKind::IV, 1});
  out.push_back({TuckerKind::V, 1});
  return out;
}

bool brute_induced_matching(const BipartiteGraph& g, const VertexMask& mask, Side u_side) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // (u, other)
  for (std::uint32_t r = 0; r < g.black_count(); ++r) {
    for (std::uint32_t c = 0; c < g.white_count(); ++c) {
      if (!g.adjacent(r, c) || !mask.contains(Vertex::black(r)) || !mask.contains(Vertex::white(c))) continue;
      edges.emplace_back(u_side == Side::Black ? std::pair{r, c} : std::pair{c, r});
    }
  }
  auto adj = [&](std::uint32_t u, std::uint32_t o) {
    return u_side == Side::Black ? g.adjacent(u, o) : g.adjacent(o, u);
  };
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [u1, a] = edges[i];
      const auto [u2, b] = edges[j];
      if (u1 == u2 || a == b) continue;
      if (!adj(u1, b) && !adj(u2, a)) return true;
    }
  }
  return false;
}

namespace {

// Distances from column `src` to every column, never entering a row
// adjacent to column `avoid`.
std::vector<std::size_t> avoiding_distances(const BipartiteGraph& g, std::uint32_t avoid, std::uint32_t src) {
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
  const std::size_t m = g.black_count(), n = g.white_count();
  std::vector<std::size_t> dist(m + n, inf);
  std::queue<std::size_t> q;
  dist[m + src] = 0;
  q.push(m + src);
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop();
    if (v < m) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c == avoid || !g.adjacent(static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(c))) continue;
        if (dist[m + c] == inf) {
          dist[m + c] = dist[v] + 1;
          q.push(m + c);
        }
      }
    } else {
      const auto c = static_cast<std::uint32_t>(v - m);
      for (std::uint32_t r = 0; r < m; ++r) {
        if (!g.adjacent(r, c) || g.adjacent(r, avoid)) continue;
        if (dist[r] == inf) {
          dist[r] = dist[v] + 1;
          q.push(r);
        }
      }
    }
  }
  return std::vector<std::size_t>(dist.begin() + static_cast<std::ptrdiff_t>(m), dist.end());
}

}  // namespace

std::optional<std::size_t> brute_min_ell(const BipartiteGraph& g) {
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
  const auto n = static_cast<std::uint32_t>(g.white_count());
  std::optional<std::size_t> best;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      for (std::uint32_t w = v + 1; w < n; ++w) {
        const auto uv = avoiding_distances(g, w, u)[v];
        const auto vw = avoiding_distances(g, u, v)[w];
        const auto uw = avoiding_distances(g, v, u)[w];
        if (uv == inf || vw == inf || uw == inf) continue;
        const std::size_t total = uv + vw + uw;
        if (!best || total < *best) best = total;
      }
  return best;
}

std::optional<std::size_t> min_size_of(const PerKindMinimum& per, TuckerKind kind) {
  const auto& w = per[static_cast<int>(kind) - 1];
  if (!w) return std::nullopt;
  return w->size();
}

std::optional<std::size_t> global_min(const PerKindMinimum& per) {
  std::optional<std::size_t> best;
  for (const auto& w : per)
    if (w && (!best || w->size() < *best)) best = w->size();
  return best;
}

}  // namespace tucker::testing
