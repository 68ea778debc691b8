#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tucker/matrix.hpp"

namespace tucker {

// Rows are black vertices, columns are white vertices.
enum class Side : std::uint8_t { Black = 0, White = 1 };

constexpr Side opposite(Side s) noexcept { return s == Side::Black ? Side::White : Side::Black; }

struct Vertex {
  Side side = Side::Black;
  std::uint32_t index = 0;

  static constexpr Vertex black(std::uint32_t i) noexcept { return {Side::Black, i}; }
  static constexpr Vertex white(std::uint32_t i) noexcept { return {Side::White, i}; }

  auto operator<=>(const Vertex&) const = default;
};

// G(M). Adjacency lists are sorted ascending; adjacency tests go through the
// packed matrix. Immutable after construction.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  explicit BipartiteGraph(const BinaryMatrix& m);

  std::size_t black_count() const noexcept { return m_; }
  std::size_t white_count() const noexcept { return n_; }
  std::size_t vertex_count() const noexcept { return m_ + n_; }
  std::size_t edge_count() const noexcept { return row_nbrs_.size(); }

  // Columns adjacent to row r.
  std::span<const std::uint32_t> row_neighbors(std::uint32_t r) const noexcept {
    return {row_nbrs_.data() + row_off_[r], row_off_[r + 1] - row_off_[r]};
  }
  // Rows adjacent to column c.
  std::span<const std::uint32_t> col_neighbors(std::uint32_t c) const noexcept {
    return {col_nbrs_.data() + col_off_[c], col_off_[c + 1] - col_off_[c]};
  }
  std::span<const std::uint32_t> neighbors(Vertex v) const noexcept {
    return v.side == Side::Black ? row_neighbors(v.index) : col_neighbors(v.index);
  }
  std::size_t degree(Vertex v) const noexcept { return neighbors(v).size(); }

  bool adjacent(std::uint32_t row, std::uint32_t col) const noexcept { return matrix_.get(row, col); }
  bool adjacent(Vertex a, Vertex b) const noexcept;

  const BinaryMatrix& matrix() const noexcept { return matrix_; }

  // Unified id: rows first, then columns.
  std::uint32_t id(Vertex v) const noexcept {
    return v.side == Side::Black ? v.index : static_cast<std::uint32_t>(m_) + v.index;
  }
  Vertex vertex(std::uint32_t id) const noexcept {
    return id < m_ ? Vertex::black(id) : Vertex::white(id - static_cast<std::uint32_t>(m_));
  }

 private:
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  BinaryMatrix matrix_;
  std::vector<std::size_t> row_off_{0};
  std::vector<std::uint32_t> row_nbrs_;
  std::vector<std::size_t> col_off_{0};
  std::vector<std::uint32_t> col_nbrs_;
};

// Per-side membership flags. Used both as "allowed vertices" of a masked
// induced subgraph and as plain vertex sets.
class VertexMask {
 public:
  VertexMask() = default;
  VertexMask(std::size_t blacks, std::size_t whites, bool value)
      : blacks_(blacks, value), whites_(whites, value) {}

  static VertexMask all(const BipartiteGraph& g) { return {g.black_count(), g.white_count(), true}; }
  static VertexMask none(const BipartiteGraph& g) { return {g.black_count(), g.white_count(), false}; }

  bool contains(Vertex v) const noexcept {
    return (v.side == Side::Black ? blacks_[v.index] : whites_[v.index]) != 0;
  }
  void insert(Vertex v) noexcept { slot(v) = 1; }
  void erase(Vertex v) noexcept { slot(v) = 0; }

  std::size_t black_count() const noexcept { return blacks_.size(); }
  std::size_t white_count() const noexcept { return whites_.size(); }

 private:
  std::uint8_t& slot(Vertex v) noexcept { return v.side == Side::Black ? blacks_[v.index] : whites_[v.index]; }

  std::vector<std::uint8_t> blacks_;
  std::vector<std::uint8_t> whites_;
};

using VertexSet = VertexMask;
using Path = std::vector<Vertex>;

// Reusable breadth-first search state. Visited marks are epoch stamped so a
// search costs only what it touches. One instance per worker.
class BfsWorkspace {
 public:
  static constexpr std::int32_t kUnreached = -1;

  explicit BfsWorkspace(const BipartiteGraph& g);

  // BFS from `source` over vertices satisfying `allowed`, neighbours visited
  // in ascending index order. Stops when a vertex satisfying `is_target` is
  // discovered (returns its id) or when depth `max_depth` is exhausted.
  template <class Allowed, class Target>
  std::optional<std::uint32_t> search(std::uint32_t source, Allowed&& allowed, Target&& is_target,
                                      std::int32_t max_depth = std::numeric_limits<std::int32_t>::max());

  // Exhaustive BFS; order() lists reached ids by nondecreasing distance.
  template <class Allowed>
  void explore(std::uint32_t source, Allowed&& allowed) {
    search(source, allowed, [](std::uint32_t) { return false; });
  }

  bool reached(std::uint32_t id) const noexcept { return stamp_[id] == epoch_; }
  std::int32_t distance(std::uint32_t id) const noexcept { return reached(id) ? dist_[id] : kUnreached; }
  std::int32_t parent(std::uint32_t id) const noexcept { return parent_[id]; }
  std::span<const std::uint32_t> order() const noexcept { return {queue_.data(), queue_len_}; }

  // Source-to-`id` path following parent pointers.
  Path path_to(std::uint32_t id) const;

  const BipartiteGraph& graph() const noexcept { return *g_; }

 private:
  void begin();

  const BipartiteGraph* g_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::int32_t> dist_;
  std::vector<std::int32_t> parent_;
  std::vector<std::uint32_t> queue_;
  std::size_t queue_len_ = 0;
  std::uint32_t epoch_ = 0;
};

template <class Allowed, class Target>
std::optional<std::uint32_t> BfsWorkspace::search(std::uint32_t source, Allowed&& allowed,
                                                  Target&& is_target, std::int32_t max_depth) {
  begin();
  const auto m = static_cast<std::uint32_t>(g_->black_count());
  stamp_[source] = epoch_;
  dist_[source] = 0;
  parent_[source] = -1;
  queue_[queue_len_++] = source;
  if (is_target(source)) return source;
  for (std::size_t head = 0; head < queue_len_; ++head) {
    const std::uint32_t cur = queue_[head];
    const std::int32_t d = dist_[cur];
    if (d >= max_depth) break;
    const bool is_row = cur < m;
    const auto nbrs = is_row ? g_->row_neighbors(cur) : g_->col_neighbors(cur - m);
    for (std::uint32_t local : nbrs) {
      const std::uint32_t nid = is_row ? m + local : local;
      if (stamp_[nid] == epoch_ || !allowed(nid)) continue;
      stamp_[nid] = epoch_;
      dist_[nid] = d + 1;
      parent_[nid] = static_cast<std::int32_t>(cur);
      queue_[queue_len_++] = nid;
      if (is_target(nid)) return nid;
    }
  }
  return std::nullopt;
}

// Distance layers N_1(x), N_2(x), ... inside the masked subgraph.
std::vector<std::vector<Vertex>> neighborhoods(const BipartiteGraph& g, Vertex x, const VertexMask& mask);

// Shortest path from source to any target inside the mask; ties go to the
// first target discovered by ascending-index BFS.
std::optional<Path> shortest_path(const BipartiteGraph& g, Vertex source, const VertexSet& targets,
                                  const VertexMask& mask);

// Rows and columns of an induced subgraph, sorted, with its submatrix.
struct InducedSubgraph {
  std::vector<std::uint32_t> rows;
  std::vector<std::uint32_t> cols;
  BinaryMatrix matrix;
};

InducedSubgraph induced_subgraph(const BipartiteGraph& g, std::span<const Vertex> vertices);

struct Edge {
  std::uint32_t row;
  std::uint32_t col;
  auto operator<=>(const Edge&) const = default;
};

// Two edges forming an induced matching in the masked subgraph, or nullopt
// when the neighbourhoods of side `u_side` form a chain under inclusion.
// O(e + m + n): count sort by degree, then adjacent-pair difference checks.
std::optional<std::pair<Edge, Edge>> induced_matching_size_two(const BipartiteGraph& g, const VertexMask& mask,
                                                                Side u_side);

}  // namespace tucker
