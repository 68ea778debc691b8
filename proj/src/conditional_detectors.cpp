#include <algorithm>
#include <array>
#include <limits>

#include "marker.hpp"
#include "parallel.hpp"
#include "tucker/detectors.hpp"

namespace tucker {

namespace {

using detail::Marker;

DetectorOutcome found_certified(const BipartiteGraph& g, std::span<const Vertex> verts, TuckerType type) {
  return DetectorOutcome::found(certify(g, verts, type));
}

// ---------------------------------------------------------------------------
// Type III

struct Phase1State {
  VertexMask mask;  // rows: N(u)\N(x); columns: C\N(w)
};

std::optional<TuckerWitness> type3_phase1(const BipartiteGraph& g, int workers) {
  const auto m = static_cast<std::uint32_t>(g.black_count());
  auto make_state = [&] { return Phase1State{VertexMask(g.black_count(), g.white_count(), false)}; };
  auto per_w = [&](Phase1State& s, std::size_t wi) -> std::optional<TuckerWitness> {
    const auto w = static_cast<std::uint32_t>(wi);
    const auto nw = g.row_neighbors(w);
    if (nw.size() < 2) return std::nullopt;
    for (std::uint32_t c = 0; c < g.white_count(); ++c) s.mask.insert(Vertex::white(c));
    for (auto c : nw) s.mask.erase(Vertex::white(c));
    std::optional<TuckerWitness> hit;
    for (std::uint32_t x : nw) {
      for (std::uint32_t u : nw) {
        if (u == x) continue;
        for (auto r : g.col_neighbors(u))
          if (!g.adjacent(r, x)) s.mask.insert(Vertex::black(r));
        const auto matching = induced_matching_size_two(g, s.mask, Side::Black);
        for (auto r : g.col_neighbors(u)) s.mask.erase(Vertex::black(r));
        if (!matching) continue;
        // Claw centred at column u: rows w, b1, b2 with private columns x, y, z.
        const auto [e1, e2] = *matching;
        const Vertex verts[] = {Vertex::white(x),      Vertex::black(w),      Vertex::white(u),    Vertex::black(e1.row),
                                Vertex::white(e1.col), Vertex::black(e2.row), Vertex::white(e2.col)};
        hit = certify(g, verts, {TuckerKind::III, 1});
        break;
      }
      if (hit) break;
    }
    for (std::uint32_t c = 0; c < g.white_count(); ++c) s.mask.erase(Vertex::white(c));
    (void)m;
    return hit;
  };
  return detail::first_hit<TuckerWitness>(g.black_count(), workers, make_state, per_w);
}

struct Phase2State {
  BfsWorkspace bfs;
  Marker in_nw;   // columns
  Marker in_d;    // rows of D
  Marker in_y;    // columns of Y
  Marker in_d1;   // rows of D_1
  Marker in_y2;   // columns of Y'
  Marker in_dp;   // rows of D'
  std::vector<std::uint32_t> d_list, y_list, y_prime;
};

struct Phase2Result {
  std::optional<TuckerWitness> witness;
  KindSet evidence;
};

Phase2Result type3_phase2_edge(const BipartiteGraph& g, Phase2State& s, std::uint32_t w, std::uint32_t x) {
  const auto m = static_cast<std::uint32_t>(g.black_count());
  Phase2Result result;

  s.in_nw.clear();
  for (auto c : g.row_neighbors(w)) s.in_nw.mark(c);

  // D = N_2(w) \ N(x); Y = N(D) \ N(w).
  s.in_d.clear();
  s.d_list.clear();
  for (auto c : g.row_neighbors(w)) {
    for (auto r : g.col_neighbors(c)) {
      if (r == w || s.in_d.marked(r) || g.adjacent(r, x)) continue;
      s.in_d.mark(r);
      s.d_list.push_back(r);
    }
  }
  s.in_y.clear();
  s.y_list.clear();
  for (auto r : s.d_list) {
    for (auto c : g.row_neighbors(r)) {
      if (s.in_nw.marked(c) || s.in_y.marked(c)) continue;
      s.in_y.mark(c);
      s.y_list.push_back(c);
    }
  }
  std::sort(s.y_list.begin(), s.y_list.end());

  std::int32_t best_i = std::numeric_limits<std::int32_t>::max();
  for (std::uint32_t y : s.y_list) {
    // G_{x,w,y}: rows D, columns N(w) \ {x} plus y.
    auto allowed = [&](std::uint32_t id) {
      if (id < m) return s.in_d.marked(id);
      const std::uint32_t c = id - m;
      return c == y || (c != x && s.in_nw.marked(c));
    };
    s.bfs.explore(m + y, allowed);

    s.in_d1.clear();
    std::size_t d1_size = 0;
    for (auto r : g.col_neighbors(y)) {
      if (s.in_d.marked(r)) {
        s.in_d1.mark(r);
        ++d1_size;
      }
    }
    // Y' = {y' in Y : D_1 \ N(y') non-empty}; D' = D n N(Y').
    s.y_prime.clear();
    s.in_y2.clear();
    s.in_dp.clear();
    for (std::uint32_t yp : s.y_list) {
      std::size_t hits = 0;
      for (auto r : g.col_neighbors(yp)) hits += s.in_d1.marked(r);
      if (hits == d1_size) continue;
      s.in_y2.mark(yp);
      s.y_prime.push_back(yp);
      for (auto r : g.col_neighbors(yp))
        if (s.in_d.marked(r)) s.in_dp.mark(r);
    }
    if (s.y_prime.empty()) continue;

    // Smallest odd layer i >= 3 meeting D'; ties to the smallest row.
    std::int32_t layer = -1;
    std::uint32_t di = 0;
    for (std::uint32_t id : s.bfs.order()) {
      const std::int32_t d = s.bfs.distance(id);
      if (layer >= 0 && d > layer) break;
      if (id >= m || d < 3 || !s.in_dp.marked(id)) continue;
      if (layer < 0 || id < di) {
        layer = d;
        di = id;
      }
    }
    if (layer < 0) continue;

    std::uint32_t y_end = 0;
    for (auto c : g.row_neighbors(di)) {
      if (s.in_y2.marked(c)) {
        y_end = c;
        break;
      }
    }
    const Path path = s.bfs.path_to(di);  // y, d_1, ..., d_i
    const std::uint32_t d1 = path[1].index;

    if (!g.adjacent(d1, y_end)) {
      if (layer < best_i) {
        best_i = layer;
        std::vector<Vertex> verts(path.begin(), path.end());
        verts.push_back(Vertex::white(x));
        verts.push_back(Vertex::black(w));
        verts.push_back(Vertex::white(y_end));
        result.witness = certify(g, verts, {TuckerKind::III, (layer - 1) / 2});
      }
      continue;
    }

    // {y', d_1} is an edge: the branch is abandoned because another type at
    // most as large exists.
    if (layer >= 5) {
      result.evidence.insert(TuckerKind::I);  // path minus y closes an (i+1)-cycle through y'
      continue;
    }
    const std::uint32_t u = path[2].index;
    std::int64_t d1_other = -1;
    for (auto r : g.col_neighbors(y)) {
      if (s.in_d.marked(r) && !g.adjacent(r, y_end)) {
        d1_other = r;
        break;
      }
    }
    const auto dp = static_cast<std::uint32_t>(d1_other);
    if (g.adjacent(dp, u)) {
      result.evidence.insert(TuckerKind::III);  // a III_1 around u; cannot happen after phase 1
      continue;
    }
    std::uint32_t u_other = 0;
    for (auto c : g.row_neighbors(dp)) {
      if (s.in_nw.marked(c)) {
        u_other = c;
        break;
      }
    }
    result.evidence.insert(g.adjacent(d1, u_other) ? TuckerKind::V : TuckerKind::I);
  }
  return result;
}

}  // namespace

DetectorOutcome find_type3_conditional(const BipartiteGraph& g, const DetectorOptions& opts) {
  if (auto claw = type3_phase1(g, opts.workers)) return DetectorOutcome::found(std::move(*claw));

  std::vector<Edge> edges;
  for (std::uint32_t r = 0; r < g.black_count(); ++r)
    for (auto c : g.row_neighbors(r)) edges.push_back({r, c});

  const auto m = g.black_count();
  const auto n = g.white_count();
  std::vector<Phase2Result> per_edge(edges.size());
  detail::for_each_index(
      edges.size(), opts.workers,
      [&] {
        return Phase2State{BfsWorkspace(g), Marker(n), Marker(m), Marker(n), Marker(m), Marker(n), Marker(m), {}, {}, {}};
      },
      [&](Phase2State& s, std::size_t i) { per_edge[i] = type3_phase2_edge(g, s, edges[i].row, edges[i].col); });

  std::optional<TuckerWitness> best;
  KindSet evidence;
  for (auto& r : per_edge) {
    if (r.witness && (!best || witness_less(*r.witness, *best))) best = std::move(r.witness);
    for (TuckerKind k : kAllKinds)
      if (r.evidence.contains(k)) evidence.insert(k);
  }
  if (best) return DetectorOutcome::found(std::move(*best));
  if (!evidence.empty()) return DetectorOutcome::superseded(evidence);
  return DetectorOutcome::not_found();
}

// ---------------------------------------------------------------------------
// Cross-edge case analysis for the ten-vertex spider.

CrossEdgeCase classify_cross_edges(const bool present[3][3]) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && present[i][j]) edges.emplace_back(i, j);
  if (edges.empty()) return CrossEdgeCase::None;
  if (edges.size() == 1) return CrossEdgeCase::Single;
  for (std::size_t p = 0; p < edges.size(); ++p) {
    for (std::size_t q = p + 1; q < edges.size(); ++q) {
      if (edges[p].first == edges[q].first) return CrossEdgeCase::MeetLeft;
    }
  }
  for (std::size_t p = 0; p < edges.size(); ++p) {
    for (std::size_t q = p + 1; q < edges.size(); ++q) {
      if (edges[p].second == edges[q].second) return CrossEdgeCase::MeetRight;
    }
  }
  return edges.size() == 2 ? CrossEdgeCase::TwoDisjoint : CrossEdgeCase::ThreeDisjoint;
}

KindSet cross_edge_consequence(CrossEdgeCase c) {
  switch (c) {
    case CrossEdgeCase::None: return {};
    case CrossEdgeCase::ThreeDisjoint: return {TuckerKind::I};
    default: return {TuckerKind::III};
  }
}

// ---------------------------------------------------------------------------
// Type IV

namespace {

struct TripleState {
  Marker in_a, in_b, in_c, in_d;  // rows
  Marker in_u, in_v, in_w;        // columns
  std::vector<std::uint32_t> a_set, b_set, c_set, d_set;
};

TripleState make_triple_state(const BipartiteGraph& g) {
  const auto m = g.black_count();
  const auto n = g.white_count();
  return {Marker(m), Marker(m), Marker(m), Marker(m), Marker(n), Marker(n), Marker(n), {}, {}, {}, {}};
}

// Rows adjacent to `own` but to neither of the other two columns.
void private_rows(const BipartiteGraph& g, std::uint32_t own, std::uint32_t o1, std::uint32_t o2,
                  std::vector<std::uint32_t>& out, Marker& mark) {
  out.clear();
  mark.clear();
  for (auto r : g.col_neighbors(own)) {
    if (!g.adjacent(r, o1) && !g.adjacent(r, o2)) {
      out.push_back(r);
      mark.mark(r);
    }
  }
}

std::optional<DetectorOutcome> type4_triple(const BipartiteGraph& g, TripleState& s, std::uint32_t x,
                                            std::uint32_t y, std::uint32_t z) {
  private_rows(g, x, y, z, s.a_set, s.in_a);
  if (s.a_set.empty()) return std::nullopt;
  private_rows(g, y, x, z, s.b_set, s.in_b);
  if (s.b_set.empty()) return std::nullopt;
  private_rows(g, z, x, y, s.c_set, s.in_c);
  if (s.c_set.empty()) return std::nullopt;
  // D: rows adjacent to none of x, y, z.
  s.d_set.clear();
  for (std::uint32_t r = 0; r < g.black_count(); ++r) {
    if (!g.adjacent(r, x) && !g.adjacent(r, y) && !g.adjacent(r, z)) s.d_set.push_back(r);
  }
  if (s.d_set.empty()) return std::nullopt;

  auto neighbourhood = [&](const std::vector<std::uint32_t>& rows, Marker& mark) {
    mark.clear();
    bool any = false;
    for (auto r : rows) {
      for (auto c : g.row_neighbors(r)) {
        if (c == x || c == y || c == z) continue;
        mark.mark(c);
        any = true;
      }
    }
    return any;
  };
  if (!neighbourhood(s.a_set, s.in_u) || !neighbourhood(s.b_set, s.in_v) || !neighbourhood(s.c_set, s.in_w)) {
    return std::nullopt;
  }

  for (std::uint32_t d : s.d_set) {
    // First three members of each of U, V, W inside N(d) suffice to decide
    // whether distinct representatives exist.
    std::array<std::vector<std::uint32_t>, 3> cand;
    for (auto c : g.row_neighbors(d)) {
      if (s.in_u.marked(c) && cand[0].size() < 3) cand[0].push_back(c);
      if (s.in_v.marked(c) && cand[1].size() < 3) cand[1].push_back(c);
      if (s.in_w.marked(c) && cand[2].size() < 3) cand[2].push_back(c);
    }
    std::optional<std::array<std::uint32_t, 3>> pick;
    for (auto u : cand[0]) {
      for (auto v : cand[1]) {
        if (v == u) continue;
        for (auto w : cand[2]) {
          if (w == u || w == v) continue;
          pick = std::array<std::uint32_t, 3>{u, v, w};
          break;
        }
        if (pick) break;
      }
      if (pick) break;
    }
    if (!pick) continue;
    const auto [u, v, w] = *pick;
    auto first_in = [&](std::uint32_t col, const Marker& mark) {
      for (auto r : g.col_neighbors(col))
        if (mark.marked(r)) return r;
      return std::uint32_t{0};
    };
    const std::uint32_t left[3] = {first_in(u, s.in_a), first_in(v, s.in_b), first_in(w, s.in_c)};
    const std::uint32_t right[3] = {u, v, w};
    bool present[3][3] = {};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) present[i][j] = g.adjacent(left[i], right[j]);
    const CrossEdgeCase cross = classify_cross_edges(present);
    if (cross != CrossEdgeCase::None) return DetectorOutcome::superseded(cross_edge_consequence(cross));
    const Vertex verts[] = {Vertex::white(x), Vertex::white(y), Vertex::white(z), Vertex::white(u),
                            Vertex::white(v), Vertex::white(w), Vertex::black(left[0]), Vertex::black(left[1]),
                            Vertex::black(left[2]), Vertex::black(d)};
    return found_certified(g, verts, {TuckerKind::IV, 1});
  }
  return std::nullopt;
}

}  // namespace

DetectorOutcome find_type4_conditional(const BipartiteGraph& g, const DetectorOptions& opts) {
  const auto n = static_cast<std::uint32_t>(g.white_count());
  if (n < 6 || g.black_count() < 4) return DetectorOutcome::not_found();
  auto per_x = [&](TripleState& s, std::size_t xi) -> std::optional<DetectorOutcome> {
    const auto x = static_cast<std::uint32_t>(xi);
    for (std::uint32_t y = x + 1; y < n; ++y)
      for (std::uint32_t z = y + 1; z < n; ++z)
        if (auto out = type4_triple(g, s, x, y, z)) return out;
    return std::nullopt;
  };
  auto hit = detail::first_hit<DetectorOutcome>(n, opts.workers, [&] { return make_triple_state(g); }, per_x);
  return hit ? std::move(*hit) : DetectorOutcome::not_found();
}

// ---------------------------------------------------------------------------
// Type V

namespace {

struct Type5State {
  TripleState sets;
  std::vector<std::uint8_t> flags;  // per column: 1 A, 2 B, 4 C, 8 D
  std::vector<std::uint32_t> touched;
};

std::optional<DetectorOutcome> type5_triple(const BipartiteGraph& g, Type5State& st, std::uint32_t x,
                                            std::uint32_t y, std::uint32_t z) {
  TripleState& s = st.sets;
  private_rows(g, x, y, z, s.a_set, s.in_a);
  if (s.a_set.empty()) return std::nullopt;
  private_rows(g, y, x, z, s.b_set, s.in_b);
  if (s.b_set.empty()) return std::nullopt;
  private_rows(g, z, x, y, s.c_set, s.in_c);
  if (s.c_set.empty()) return std::nullopt;
  // D = (N(y) n N(z)) \ N(x).
  s.d_set.clear();
  s.in_d.clear();
  for (auto r : g.col_neighbors(y)) {
    if (g.adjacent(r, z) && !g.adjacent(r, x)) {
      s.d_set.push_back(r);
      s.in_d.mark(r);
    }
  }
  if (s.d_set.empty()) return std::nullopt;

  constexpr std::uint8_t kA = 1, kB = 2, kC = 4, kD = 8;
  auto spread = [&](const std::vector<std::uint32_t>& rows, std::uint8_t bit) {
    for (auto r : rows) {
      for (auto c : g.row_neighbors(r)) {
        if (st.flags[c] == 0) st.touched.push_back(c);
        st.flags[c] |= bit;
      }
    }
  };
  spread(s.a_set, kA);
  spread(s.b_set, kB);
  spread(s.c_set, kC);
  spread(s.d_set, kD);
  std::int64_t u = -1, v = -1;
  std::uint8_t u_flags = 0, v_flags = 0;
  for (auto c : st.touched) {
    const std::uint8_t f = st.flags[c];
    if ((f & (kA | kB | kD)) == (kA | kB | kD) && (u < 0 || c < u)) u = c, u_flags = f;
    if ((f & (kA | kC | kD)) == (kA | kC | kD) && (v < 0 || c < v)) v = c, v_flags = f;
  }
  for (auto c : st.touched) st.flags[c] = 0;
  st.touched.clear();
  if (u < 0 || v < 0) return std::nullopt;

  // A column seeing A, B, C and D centres a III_1 with x, y, z.
  if ((u_flags & kC) || (v_flags & kB)) return DetectorOutcome::superseded({TuckerKind::III});

  const auto uc = static_cast<std::uint32_t>(u);
  const auto vc = static_cast<std::uint32_t>(v);
  std::int64_t a = -1, d = -1, b = -1, c = -1;
  for (auto r : s.a_set)
    if (g.adjacent(r, uc) && g.adjacent(r, vc)) {
      a = r;
      break;
    }
  for (auto r : s.d_set)
    if (g.adjacent(r, uc) && g.adjacent(r, vc)) {
      d = r;
      break;
    }
  // Otherwise a C6 or C8 runs through x, u, y / z, v.
  if (a < 0 || d < 0) return DetectorOutcome::superseded({TuckerKind::I});
  for (auto r : s.b_set)
    if (g.adjacent(r, uc)) {
      b = r;
      break;
    }
  for (auto r : s.c_set)
    if (g.adjacent(r, vc)) {
      c = r;
      break;
    }
  const Vertex verts[] = {Vertex::white(x),
                          Vertex::white(y),
                          Vertex::white(z),
                          Vertex::white(uc),
                          Vertex::white(vc),
                          Vertex::black(static_cast<std::uint32_t>(a)),
                          Vertex::black(static_cast<std::uint32_t>(b)),
                          Vertex::black(static_cast<std::uint32_t>(c)),
                          Vertex::black(static_cast<std::uint32_t>(d))};
  return found_certified(g, verts, {TuckerKind::V, 1});
}

}  // namespace

DetectorOutcome find_type5_conditional(const BipartiteGraph& g, const DetectorOptions& opts) {
  const auto n = static_cast<std::uint32_t>(g.white_count());
  if (n < 5 || g.black_count() < 4) return DetectorOutcome::not_found();
  // y and z play symmetric roles.
  auto per_x = [&](Type5State& s, std::size_t xi) -> std::optional<DetectorOutcome> {
    const auto x = static_cast<std::uint32_t>(xi);
    for (std::uint32_t y = 0; y < n; ++y) {
      if (y == x) continue;
      for (std::uint32_t z = y + 1; z < n; ++z) {
        if (z == x) continue;
        if (auto out = type5_triple(g, s, x, y, z)) return out;
      }
    }
    return std::nullopt;
  };
  auto make_state = [&] { return Type5State{make_triple_state(g), std::vector<std::uint8_t>(n, 0), {}}; };
  auto hit = detail::first_hit<DetectorOutcome>(n, opts.workers, make_state, per_x);
  return hit ? std::move(*hit) : DetectorOutcome::not_found();
}

}  // namespace tucker
