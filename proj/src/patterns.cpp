#include "tucker/patterns.hpp"

#include <algorithm>
#include <functional>

#include "tucker/errors.hpp"

namespace tucker {

std::string_view kind_name(TuckerKind kind) noexcept {
  switch (kind) {
    case TuckerKind::I: return "I";
    case TuckerKind::II: return "II";
    case TuckerKind::III: return "III";
    case TuckerKind::IV: return "IV";
    case TuckerKind::V: return "V";
  }
  return "?";
}

std::optional<TuckerKind> parse_kind(std::string_view name) noexcept {
  for (TuckerKind k : kAllKinds) {
    if (kind_name(k) == name) return k;
  }
  return std::nullopt;
}

std::string to_string(TuckerType t) {
  std::string s(kind_name(t.kind));
  if (t.kind == TuckerKind::I || t.kind == TuckerKind::II || t.kind == TuckerKind::III) {
    s += "_" + std::to_string(t.k);
  }
  return s;
}

std::string to_string(KindSet s) {
  std::string out;
  for (TuckerKind k : kAllKinds) {
    if (!s.contains(k)) continue;
    if (!out.empty()) out += ",";
    out += kind_name(k);
  }
  return out;
}

BinaryMatrix PatternGraph::to_matrix() const {
  BinaryMatrix m(rows(), cols());
  for (const Edge& e : edges) m.set(e.row, e.col);
  m.set_row_labels(row_names);
  m.set_col_labels(col_names);
  return m;
}

void validate(TuckerType type) {
  if (type.k < 1) throw InvalidArgument("pattern parameter k must be >= 1, got " + std::to_string(type.k));
  if ((type.kind == TuckerKind::IV || type.kind == TuckerKind::V) && type.k != 1) {
    throw InvalidArgument("types IV and V take k = 1 only");
  }
}

std::size_t pattern_size(TuckerType type) {
  validate(type);
  const auto k = static_cast<std::size_t>(type.k);
  switch (type.kind) {
    case TuckerKind::I: return 2 * k + 4;
    case TuckerKind::II: return 2 * k + 6;
    case TuckerKind::III: return 2 * k + 5;
    case TuckerKind::IV: return 10;
    case TuckerKind::V: return 9;
  }
  return 0;
}

PatternGraph generate(TuckerType type) {
  validate(type);
  PatternGraph p;
  p.type = type;
  const auto k = static_cast<std::uint32_t>(type.k);
  auto numbered = [](const char* prefix, std::uint32_t count, std::uint32_t first = 0) {
    std::vector<std::string> names;
    for (std::uint32_t i = 0; i < count; ++i) names.push_back(prefix + std::to_string(first + i));
    return names;
  };

  switch (type.kind) {
    case TuckerKind::I: {
      // Chordless cycle on k+2 rows and k+2 columns.
      const std::uint32_t s = k + 2;
      p.row_names = numbered("r", s);
      p.col_names = numbered("c", s);
      for (std::uint32_t i = 0; i + 1 < s; ++i) {
        p.edges.push_back({i, i});
        p.edges.push_back({i, i + 1});
      }
      p.edges.push_back({s - 1, 0});
      p.edges.push_back({s - 1, s - 1});
      break;
    }
    case TuckerKind::II: {
      // Rows 0..k form a path over columns 0..k+1; row k+1 covers columns
      // 0..k and k+2; row k+2 covers columns 1..k+2.
      const std::uint32_t s = k + 3;
      p.row_names = numbered("r", s);
      p.col_names = numbered("c", s);
      for (std::uint32_t i = 0; i <= k; ++i) {
        p.edges.push_back({i, i});
        p.edges.push_back({i, i + 1});
      }
      for (std::uint32_t c = 0; c <= k; ++c) p.edges.push_back({k + 1, c});
      p.edges.push_back({k + 1, k + 2});
      for (std::uint32_t c = 1; c <= k + 2; ++c) p.edges.push_back({k + 2, c});
      break;
    }
    case TuckerKind::III: {
      // Rows w, u1..u(k+1); columns x, y, z, v1..vk. Path y u1 v1 u2 ... u(k+1) z,
      // w adjacent to x and every v.
      p.row_names = {"w"};
      for (auto& n : numbered("u", k + 1, 1)) p.row_names.push_back(n);
      p.col_names = {"x", "y", "z"};
      for (auto& n : numbered("v", k, 1)) p.col_names.push_back(n);
      const std::uint32_t x = 0, y = 1, z = 2;
      auto v = [](std::uint32_t i) { return 2 + i; };  // v1 is column 3
      p.edges.push_back({0, x});
      for (std::uint32_t i = 1; i <= k; ++i) p.edges.push_back({0, v(i)});
      p.edges.push_back({1, y});
      for (std::uint32_t j = 1; j <= k; ++j) {
        p.edges.push_back({j, v(j)});
        p.edges.push_back({j + 1, v(j)});
      }
      p.edges.push_back({k + 1, z});
      break;
    }
    case TuckerKind::IV: {
      // Spider with centre d and legs d-u-a-x, d-v-b-y, d-w-c-z.
      p.row_names = {"a", "b", "c", "d"};
      p.col_names = {"x", "u", "y", "v", "z", "w"};
      p.edges = {{0, 0}, {0, 1}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 1}, {3, 3}, {3, 5}};
      break;
    }
    case TuckerKind::V: {
      p.row_names = {"a", "b", "c", "d"};
      p.col_names = {"x", "u", "v", "y", "z"};
      p.edges = {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 4}, {3, 1}, {3, 3}};
      break;
    }
  }
  std::sort(p.edges.begin(), p.edges.end());
  return p;
}

BinaryMatrix pattern_matrix(TuckerType type) { return generate(type).to_matrix(); }

namespace {

// Adjacency over unified ids (rows, then columns) of a small matrix.
struct SmallGraph {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::uint32_t>> adj;
  const BinaryMatrix* matrix = nullptr;

  explicit SmallGraph(const BinaryMatrix& m) : rows(m.rows()), cols(m.cols()), adj(m.rows() + m.cols()), matrix(&m) {
    for (std::uint32_t r = 0; r < rows; ++r) {
      for (std::uint32_t c = 0; c < cols; ++c) {
        if (m.get(r, c)) {
          adj[r].push_back(static_cast<std::uint32_t>(rows + c));
          adj[rows + c].push_back(r);
        }
      }
    }
  }
  std::size_t size() const { return rows + cols; }
  bool is_row(std::uint32_t v) const { return v < rows; }
  bool edge(std::uint32_t a, std::uint32_t b) const {
    if (is_row(a) == is_row(b)) return false;
    if (!is_row(a)) std::swap(a, b);
    return matrix->get(a, b - rows);
  }
};

std::vector<std::size_t> sorted_degrees(const SmallGraph& g, bool rows) {
  std::vector<std::size_t> d;
  const std::size_t lo = rows ? 0 : g.rows;
  const std::size_t hi = rows ? g.rows : g.size();
  for (std::size_t v = lo; v < hi; ++v) d.push_back(g.adj[v].size());
  std::sort(d.begin(), d.end());
  return d;
}

// Side-preserving isomorphism by backtracking along a BFS order of the
// pattern; every new vertex is drawn from the image of its BFS parent's
// neighbourhood.
bool isomorphic(const BinaryMatrix& pattern, const BinaryMatrix& target) {
  if (pattern.rows() != target.rows() || pattern.cols() != target.cols()) return false;
  const SmallGraph p(pattern);
  const SmallGraph t(target);
  if (sorted_degrees(p, true) != sorted_degrees(t, true) || sorted_degrees(p, false) != sorted_degrees(t, false)) {
    return false;
  }
  const std::size_t n = p.size();
  if (n == 0) return true;

  std::vector<std::uint32_t> order;
  std::vector<std::int32_t> bfs_parent(n, -1);
  std::vector<char> seen(n, 0);
  std::uint32_t start = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (p.adj[v].size() > p.adj[start].size()) start = v;
  }
  for (std::uint32_t root = start, scanned = 0; order.size() < n; root = scanned++) {
    if (seen[root]) continue;
    seen[root] = 1;
    order.push_back(root);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
      for (std::uint32_t nb : p.adj[order[head]]) {
        if (!seen[nb]) {
          seen[nb] = 1;
          bfs_parent[nb] = static_cast<std::int32_t>(order[head]);
          order.push_back(nb);
        }
      }
    }
  }

  std::vector<std::int32_t> image(n, -1);
  std::vector<char> used(n, 0);
  std::vector<std::uint32_t> all_targets(n);
  for (std::uint32_t v = 0; v < n; ++v) all_targets[v] = v;

  std::function<bool(std::size_t)> extend = [&](std::size_t pos) -> bool {
    if (pos == n) return true;
    const std::uint32_t pv = order[pos];
    const auto& candidates =
        bfs_parent[pv] >= 0 ? t.adj[static_cast<std::size_t>(image[static_cast<std::size_t>(bfs_parent[pv])])]
                            : all_targets;
    for (std::uint32_t tv : candidates) {
      if (used[tv] || t.is_row(tv) != p.is_row(pv) || t.adj[tv].size() != p.adj[pv].size()) continue;
      bool ok = true;
      for (std::size_t q = 0; q < pos && ok; ++q) {
        const std::uint32_t pq = order[q];
        if (p.is_row(pq) == p.is_row(pv)) continue;
        ok = p.edge(pv, pq) == t.edge(tv, static_cast<std::uint32_t>(image[pq]));
      }
      if (!ok) continue;
      image[pv] = static_cast<std::int32_t>(tv);
      used[tv] = 1;
      if (extend(pos + 1)) return true;
      used[tv] = 0;
      image[pv] = -1;
    }
    return false;
  };
  return extend(0);
}

// The unique family member with these dimensions and this many ones.
std::optional<TuckerType> candidate_type(std::size_t r, std::size_t c, std::size_t ones) {
  if (r == 4 && c == 6 && ones == 9) return TuckerType{TuckerKind::IV, 1};
  if (r == 4 && c == 5 && ones == 11) return TuckerType{TuckerKind::V, 1};
  if (r == c && r >= 3 && ones == 2 * r) return TuckerType{TuckerKind::I, static_cast<int>(r) - 2};
  if (r == c && r >= 4 && ones == 4 * r - 6) return TuckerType{TuckerKind::II, static_cast<int>(r) - 3};
  if (c == r + 1 && r >= 3 && ones == 3 * r - 3) return TuckerType{TuckerKind::III, static_cast<int>(r) - 2};
  return std::nullopt;
}

}  // namespace

std::optional<TuckerType> classify(const BinaryMatrix& sub) {
  const auto candidate = candidate_type(sub.rows(), sub.cols(), stats(sub).ones);
  if (!candidate) return std::nullopt;
  if (!isomorphic(pattern_matrix(*candidate), sub)) return std::nullopt;
  return candidate;
}

}  // namespace tucker
