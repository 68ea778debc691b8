#include <algorithm>
#include <limits>

#include "marker.hpp"
#include "parallel.hpp"
#include "tucker/detectors.hpp"

namespace tucker {

namespace {

using detail::Marker;

TuckerWitness raw_witness(TuckerType type, std::span<const Vertex> vertices) {
  TuckerWitness w{type, {}, {}};
  for (Vertex v : vertices) (v.side == Side::Black ? w.rows : w.cols).push_back(v.index);
  std::sort(w.rows.begin(), w.rows.end());
  std::sort(w.cols.begin(), w.cols.end());
  return w;
}

std::int32_t depth_budget(const std::optional<TuckerWitness>& best, std::size_t fixed_vertices) {
  if (!best) return std::numeric_limits<std::int32_t>::max();
  return static_cast<std::int32_t>(best->size()) - static_cast<std::int32_t>(fixed_vertices);
}

std::optional<TuckerWitness> certified(const BipartiteGraph& g, std::optional<TuckerWitness> w) {
  if (!w) return w;
  std::vector<Vertex> vs;
  for (auto r : w->rows) vs.push_back(Vertex::black(r));
  for (auto c : w->cols) vs.push_back(Vertex::white(c));
  return certify(g, vs, w->type);
}

struct Type1State {
  BfsWorkspace bfs;
  Marker in_nw;      // columns of N(w)
  Marker in_nx;      // rows of N(x)
  Marker in_common;  // rows of N(x) and N(y)
};

}  // namespace

std::optional<TuckerWitness> find_min_type1(const BipartiteGraph& g, const DetectorOptions& opts) {
  const auto m = static_cast<std::uint32_t>(g.black_count());
  auto make_state = [&] {
    return Type1State{BfsWorkspace(g), Marker(g.white_count()), Marker(m), Marker(m)};
  };
  auto per_row = [&](Type1State& s, std::size_t wi, const std::optional<TuckerWitness>& global) {
    const auto w = static_cast<std::uint32_t>(wi);
    std::optional<TuckerWitness> best = global;
    std::optional<TuckerWitness> found;
    const auto nw = g.row_neighbors(w);
    s.in_nw.clear();
    for (auto c : nw) s.in_nw.mark(c);
    for (std::size_t i = 0; i < nw.size(); ++i) {
      const std::uint32_t x = nw[i];
      s.in_nx.clear();
      for (auto r : g.col_neighbors(x)) s.in_nx.mark(r);
      for (std::size_t j = i + 1; j < nw.size(); ++j) {
        const std::uint32_t y = nw[j];
        s.in_common.clear();
        for (auto r : g.col_neighbors(y))
          if (s.in_nx.marked(r)) s.in_common.mark(r);
        // G_{w,x,y}: rows outside N(x) n N(y), columns outside N(w) plus x, y.
        auto allowed = [&](std::uint32_t id) {
          if (id < m) return !s.in_common.marked(id);
          const std::uint32_t c = id - m;
          return !s.in_nw.marked(c) || c == x || c == y;
        };
        // Cycle vertex count = path length + 2.
        const auto hit = s.bfs.search(
            m + x, allowed, [&](std::uint32_t id) { return id == m + y; }, depth_budget(best, 2));
        if (!hit) continue;
        Path cycle = s.bfs.path_to(*hit);
        cycle.push_back(Vertex::black(w));
        const int k = static_cast<int>(cycle.size()) / 2 - 2;
        TuckerWitness cand = raw_witness({TuckerKind::I, k}, cycle);
        if (!best || witness_less(cand, *best)) {
          best = cand;
          found = std::move(cand);
        }
      }
    }
    return found;
  };
  return certified(g, detail::min_reduce<TuckerWitness>(m, opts.workers, make_state, per_row, witness_less));
}

namespace {

struct Type3State {
  BfsWorkspace bfs;
  Marker in_nw;  // columns
  Marker in_na;  // columns
  Marker in_nx;  // rows
  Marker in_ny;  // rows
};

}  // namespace

std::optional<TuckerWitness> find_min_type3(const BipartiteGraph& g, const DetectorOptions& opts) {
  const auto m = static_cast<std::uint32_t>(g.black_count());
  const auto n = static_cast<std::uint32_t>(g.white_count());
  std::vector<Edge> edges;
  for (std::uint32_t r = 0; r < m; ++r)
    for (auto c : g.row_neighbors(r)) edges.push_back({r, c});

  auto make_state = [&] { return Type3State{BfsWorkspace(g), Marker(n), Marker(n), Marker(m), Marker(m)}; };
  auto per_edge = [&](Type3State& s, std::size_t ei, const std::optional<TuckerWitness>& global) {
    const std::uint32_t w = edges[ei].row;
    const std::uint32_t x = edges[ei].col;
    std::optional<TuckerWitness> best = global;
    std::optional<TuckerWitness> found;
    s.in_nw.clear();
    for (auto c : g.row_neighbors(w)) s.in_nw.mark(c);
    s.in_nx.clear();
    for (auto r : g.col_neighbors(x)) s.in_nx.mark(r);
    // The pair {y, a} must be an edge with y outside N(w) and a outside N(x).
    for (std::uint32_t a = 0; a < m; ++a) {
      if (s.in_nx.marked(a)) continue;
      s.in_na.clear();
      for (auto c : g.row_neighbors(a)) s.in_na.mark(c);
      for (std::uint32_t y : g.row_neighbors(a)) {
        if (s.in_nw.marked(y)) continue;
        s.in_ny.clear();
        for (auto r : g.col_neighbors(y)) s.in_ny.mark(r);
        // G_{x,w,y,a}: rows outside N(x) u N(y) plus a; columns in N(w)\{x} or outside N(a).
        auto allowed = [&](std::uint32_t id) {
          if (id < m) return id == a || (!s.in_nx.marked(id) && !s.in_ny.marked(id));
          const std::uint32_t c = id - m;
          return (s.in_nw.marked(c) && c != x) || !s.in_na.marked(c);
        };
        auto target = [&](std::uint32_t id) {
          if (id < m) return false;
          const std::uint32_t c = id - m;
          return !s.in_nw.marked(c) && !s.in_na.marked(c);
        };
        // Witness vertex count = w, x, y plus path length + 1.
        const auto hit = s.bfs.search(a, allowed, target, depth_budget(best, 4));
        if (!hit) continue;
        Path verts = s.bfs.path_to(*hit);
        verts.push_back(Vertex::black(w));
        verts.push_back(Vertex::white(x));
        verts.push_back(Vertex::white(y));
        const int k = (static_cast<int>(verts.size()) - 5) / 2;
        TuckerWitness cand = raw_witness({TuckerKind::III, k}, verts);
        if (!best || witness_less(cand, *best)) {
          best = cand;
          found = std::move(cand);
        }
      }
    }
    return found;
  };
  return certified(g, detail::min_reduce<TuckerWitness>(edges.size(), opts.workers, make_state, per_edge,
                                                        witness_less));
}

namespace {

struct QuadState {
  Marker mark_b;  // columns of N(b)
  Marker mark_c;  // columns of N(c)
  std::vector<std::uint32_t> s1, s2, s3;
};

}  // namespace

std::optional<TuckerWitness> find_type4(const BipartiteGraph& g, const DetectorOptions& opts) {
  const auto m = static_cast<std::uint32_t>(g.black_count());
  const auto n = g.white_count();
  if (m < 4) return std::nullopt;
  auto make_state = [&] { return QuadState{Marker(n), Marker(n), {}, {}, {}}; };
  // a < b < c (the three legs are interchangeable), any d.
  auto per_a = [&](QuadState& s, std::size_t ai) -> std::optional<TuckerWitness> {
    const auto a = static_cast<std::uint32_t>(ai);
    for (std::uint32_t b = a + 1; b < m; ++b) {
      s.mark_b.clear();
      for (auto col : g.row_neighbors(b)) s.mark_b.mark(col);
      for (std::uint32_t c = b + 1; c < m; ++c) {
        s.mark_c.clear();
        for (auto col : g.row_neighbors(c)) s.mark_c.mark(col);
        // UX, VY, WZ: private columns of a, b, c.
        s.s1.clear();
        s.s2.clear();
        s.s3.clear();
        for (auto col : g.row_neighbors(a))
          if (!s.mark_b.marked(col) && !s.mark_c.marked(col)) s.s1.push_back(col);
        if (s.s1.size() < 2) continue;
        for (auto col : g.row_neighbors(b))
          if (!g.adjacent(a, col) && !s.mark_c.marked(col)) s.s2.push_back(col);
        if (s.s2.size() < 2) continue;
        for (auto col : g.row_neighbors(c))
          if (!g.adjacent(a, col) && !s.mark_b.marked(col)) s.s3.push_back(col);
        if (s.s3.size() < 2) continue;
        for (std::uint32_t d = 0; d < m; ++d) {
          if (d == a || d == b || d == c) continue;
          // Split each private set by membership in N(d): in -> u, v, w; out -> x, y, z.
          auto split = [&](const std::vector<std::uint32_t>& set, std::int64_t& in, std::int64_t& out) {
            in = out = -1;
            for (auto col : set) {
              auto& slot = g.adjacent(d, col) ? in : out;
              if (slot < 0) slot = col;
              if (in >= 0 && out >= 0) return true;
            }
            return false;
          };
          std::int64_t u, x, v, y, w, z;
          if (!split(s.s1, u, x) || !split(s.s2, v, y) || !split(s.s3, w, z)) continue;
          const Vertex verts[] = {Vertex::black(a), Vertex::black(b), Vertex::black(c), Vertex::black(d),
                                  Vertex::white(static_cast<std::uint32_t>(x)), Vertex::white(static_cast<std::uint32_t>(y)),
                                  Vertex::white(static_cast<std::uint32_t>(z)), Vertex::white(static_cast<std::uint32_t>(u)),
                                  Vertex::white(static_cast<std::uint32_t>(v)), Vertex::white(static_cast<std::uint32_t>(w))};
          return raw_witness({TuckerKind::IV, 1}, verts);
        }
      }
    }
    return std::nullopt;
  };
  return certified(g, detail::first_hit<TuckerWitness>(m, opts.workers, make_state, per_a));
}

std::optional<TuckerWitness> find_type5(const BipartiteGraph& g, const DetectorOptions& opts) {
  const auto m = static_cast<std::uint32_t>(g.black_count());
  if (m < 4) return std::nullopt;
  auto make_state = [] { return 0; };
  // Roles of c and d are symmetric (they swap U/Y with V/Z), so c < d.
  auto per_a = [&](int&, std::size_t ai) -> std::optional<TuckerWitness> {
    const auto a = static_cast<std::uint32_t>(ai);
    for (std::uint32_t b = 0; b < m; ++b) {
      if (b == a) continue;
      for (std::uint32_t c = 0; c < m; ++c) {
        if (c == a || c == b) continue;
        for (std::uint32_t d = c + 1; d < m; ++d) {
          if (d == a || d == b) continue;
          std::int64_t u = -1, y = -1, v = -1, z = -1, x = -1;
          for (auto col : g.row_neighbors(b)) {
            const bool in_c = g.adjacent(c, col);
            const bool in_d = g.adjacent(d, col);
            if (in_d && !in_c) {
              auto& slot = g.adjacent(a, col) ? u : y;  // UY split by N(a)
              if (slot < 0) slot = col;
            } else if (in_c && !in_d) {
              auto& slot = g.adjacent(a, col) ? v : z;  // VZ split by N(a)
              if (slot < 0) slot = col;
            }
          }
          if (u < 0 || y < 0 || v < 0 || z < 0) continue;
          for (auto col : g.row_neighbors(a)) {
            if (!g.adjacent(b, col) && !g.adjacent(c, col) && !g.adjacent(d, col)) {
              x = col;
              break;
            }
          }
          if (x < 0) continue;
          const Vertex verts[] = {Vertex::black(a), Vertex::black(b), Vertex::black(c), Vertex::black(d),
                                  Vertex::white(static_cast<std::uint32_t>(x)), Vertex::white(static_cast<std::uint32_t>(y)),
                                  Vertex::white(static_cast<std::uint32_t>(z)), Vertex::white(static_cast<std::uint32_t>(u)),
                                  Vertex::white(static_cast<std::uint32_t>(v))};
          return raw_witness({TuckerKind::V, 1}, verts);
        }
      }
    }
    return std::nullopt;
  };
  return certified(g, detail::first_hit<TuckerWitness>(m, opts.workers, make_state, per_a));
}

}  // namespace tucker
