#include "tucker/bigraph.hpp"

#include <algorithm>

namespace tucker {

BipartiteGraph::BipartiteGraph(const BinaryMatrix& m) : m_(m.rows()), n_(m.cols()), matrix_(m) {
  row_off_.assign(m_ + 1, 0);
  col_off_.assign(n_ + 1, 0);
  for (std::size_t r = 0; r < m_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (m.get(r, c)) {
        ++row_off_[r + 1];
        ++col_off_[c + 1];
      }
    }
  }
  for (std::size_t r = 0; r < m_; ++r) row_off_[r + 1] += row_off_[r];
  for (std::size_t c = 0; c < n_; ++c) col_off_[c + 1] += col_off_[c];
  row_nbrs_.resize(row_off_[m_]);
  col_nbrs_.resize(col_off_[n_]);
  std::vector<std::size_t> col_fill(col_off_.begin(), col_off_.end() - 1);
  for (std::size_t r = 0; r < m_; ++r) {
    std::size_t pos = row_off_[r];
    for (std::size_t c = 0; c < n_; ++c) {
      if (m.get(r, c)) {
        row_nbrs_[pos++] = static_cast<std::uint32_t>(c);
        col_nbrs_[col_fill[c]++] = static_cast<std::uint32_t>(r);
      }
    }
  }
}

bool BipartiteGraph::adjacent(Vertex a, Vertex b) const noexcept {
  if (a.side == b.side) return false;
  return a.side == Side::Black ? adjacent(a.index, b.index) : adjacent(b.index, a.index);
}

BfsWorkspace::BfsWorkspace(const BipartiteGraph& g)
    : g_(&g),
      stamp_(g.vertex_count(), 0),
      dist_(g.vertex_count(), 0),
      parent_(g.vertex_count(), -1),
      queue_(g.vertex_count(), 0) {}

void BfsWorkspace::begin() {
  queue_len_ = 0;
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
}

Path BfsWorkspace::path_to(std::uint32_t id) const {
  Path path;
  for (std::int32_t cur = static_cast<std::int32_t>(id); cur >= 0; cur = parent_[cur]) {
    path.push_back(g_->vertex(static_cast<std::uint32_t>(cur)));
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::vector<Vertex>> neighborhoods(const BipartiteGraph& g, Vertex x, const VertexMask& mask) {
  BfsWorkspace bfs(g);
  bfs.explore(g.id(x), [&](std::uint32_t id) { return mask.contains(g.vertex(id)); });
  std::vector<std::vector<Vertex>> layers;
  for (std::uint32_t id : bfs.order()) {
    const auto d = static_cast<std::size_t>(bfs.distance(id));
    if (d == 0) continue;
    if (layers.size() < d) layers.resize(d);
    layers[d - 1].push_back(g.vertex(id));
  }
  for (auto& layer : layers) std::sort(layer.begin(), layer.end());
  return layers;
}

std::optional<Path> shortest_path(const BipartiteGraph& g, Vertex source, const VertexSet& targets,
                                  const VertexMask& mask) {
  BfsWorkspace bfs(g);
  auto hit = bfs.search(
      g.id(source), [&](std::uint32_t id) { return mask.contains(g.vertex(id)); },
      [&](std::uint32_t id) { return targets.contains(g.vertex(id)); });
  if (!hit) return std::nullopt;
  return bfs.path_to(*hit);
}

InducedSubgraph induced_subgraph(const BipartiteGraph& g, std::span<const Vertex> vertices) {
  InducedSubgraph sub;
  for (Vertex v : vertices) (v.side == Side::Black ? sub.rows : sub.cols).push_back(v.index);
  std::sort(sub.rows.begin(), sub.rows.end());
  sub.rows.erase(std::unique(sub.rows.begin(), sub.rows.end()), sub.rows.end());
  std::sort(sub.cols.begin(), sub.cols.end());
  sub.cols.erase(std::unique(sub.cols.begin(), sub.cols.end()), sub.cols.end());
  sub.matrix = g.matrix().submatrix(sub.rows, sub.cols);
  return sub;
}

std::optional<std::pair<Edge, Edge>> induced_matching_size_two(const BipartiteGraph& g, const VertexMask& mask,
                                                                Side u_side) {
  const Side other = opposite(u_side);
  const std::size_t u_count = u_side == Side::Black ? g.black_count() : g.white_count();

  auto masked_neighbors = [&](std::uint32_t u, auto&& fn) {
    for (std::uint32_t nb : g.neighbors({u_side, u})) {
      if (mask.contains({other, nb})) {
        if (fn(nb)) return;
      }
    }
  };
  auto adjacent = [&](std::uint32_t u, std::uint32_t nb) {
    return u_side == Side::Black ? g.adjacent(u, nb) : g.adjacent(nb, u);
  };
  auto edge = [&](std::uint32_t u, std::uint32_t nb) {
    return u_side == Side::Black ? Edge{u, nb} : Edge{nb, u};
  };

  // Count sort of the allowed U vertices by masked degree.
  std::vector<std::uint32_t> degree(u_count, 0);
  std::size_t max_degree = 0;
  std::vector<std::uint32_t> members;
  for (std::uint32_t u = 0; u < u_count; ++u) {
    if (!mask.contains({u_side, u})) continue;
    masked_neighbors(u, [&](std::uint32_t) {
      ++degree[u];
      return false;
    });
    members.push_back(u);
    max_degree = std::max<std::size_t>(max_degree, degree[u]);
  }
  std::vector<std::size_t> bucket(max_degree + 2, 0);
  for (std::uint32_t u : members) ++bucket[degree[u] + 1];
  for (std::size_t d = 1; d < bucket.size(); ++d) bucket[d] += bucket[d - 1];
  std::vector<std::uint32_t> order(members.size());
  for (std::uint32_t u : members) order[bucket[degree[u]]++] = u;

  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const std::uint32_t lo = order[i];
    const std::uint32_t hi = order[i + 1];
    std::optional<std::uint32_t> a;
    masked_neighbors(lo, [&](std::uint32_t nb) {
      if (!adjacent(hi, nb)) a = nb;
      return a.has_value();
    });
    if (!a) continue;
    // deg(lo) <= deg(hi) and N(lo) is not contained in N(hi), so the
    // converse difference is non-empty as well.
    std::optional<std::uint32_t> b;
    masked_neighbors(hi, [&](std::uint32_t nb) {
      if (!adjacent(lo, nb)) b = nb;
      return b.has_value();
    });
    return std::make_pair(edge(lo, *a), edge(hi, *b));
  }
  return std::nullopt;
}

}  // namespace tucker
