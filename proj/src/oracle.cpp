#include "tucker/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include "tucker/errors.hpp"

namespace tucker {

namespace {

void require_cols(const BinaryMatrix& m, const OracleBounds& b) {
  if (m.cols() > b.max_cols) {
    throw BoundExceeded("oracle refuses " + std::to_string(m.cols()) + " columns (bound " +
                        std::to_string(b.max_cols) + ")");
  }
}

void require_dims(const BinaryMatrix& m, const OracleBounds& b) {
  if (m.rows() > b.max_dim || m.cols() > b.max_dim) {
    throw BoundExceeded("oracle refuses a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                        " matrix (bound " + std::to_string(b.max_dim) + ")");
  }
}

// Columns are placed left to right. A row is open while its ones so far end
// at the last placed column, closed once a zero follows them.
class PermutationSearch {
 public:
  explicit PermutationSearch(const BinaryMatrix& m) : m_(m), words_((m.rows() + 63) / 64) {
    col_rows_.assign(m.cols(), std::vector<std::uint64_t>(words_, 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m.get(r, c)) col_rows_[c][r >> 6] |= std::uint64_t{1} << (r & 63);
  }

  bool run() {
    std::vector<std::uint64_t> started(words_, 0), open(words_, 0);
    return place(0, started, open);
  }

 private:
  bool place(std::uint32_t used, const std::vector<std::uint64_t>& started, const std::vector<std::uint64_t>& open) {
    if (used == (std::uint32_t{1} << m_.cols()) - 1) return true;
    std::string key(reinterpret_cast<const char*>(&used), sizeof used);
    key.append(reinterpret_cast<const char*>(open.data()), open.size() * sizeof(std::uint64_t));
    if (failed_.count(key)) return false;
    std::vector<std::uint64_t> s2(words_), o2(words_);
    for (std::size_t c = 0; c < m_.cols(); ++c) {
      if (used >> c & 1u) continue;
      const auto& bits = col_rows_[c];
      bool ok = true;
      for (std::size_t i = 0; i < words_ && ok; ++i) {
        const std::uint64_t closed = started[i] & ~open[i];
        if (bits[i] & closed) ok = false;
        s2[i] = started[i] | bits[i];
        o2[i] = bits[i];
      }
      if (ok && place(used | (std::uint32_t{1} << c), s2, o2)) return true;
    }
    failed_.insert(std::move(key));
    return false;
  }

  const BinaryMatrix& m_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> col_rows_;
  std::unordered_set<std::string> failed_;
};

bool c1p_unchecked(const BinaryMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return true;
  return PermutationSearch(m).run();
}

// Calls fn(rows, cols) for every pair of non-empty subsets.
void for_each_submatrix(std::size_t m, std::size_t n,
                        const std::function<void(const std::vector<std::uint32_t>&, const std::vector<std::uint32_t>&)>& fn) {
  std::vector<std::uint32_t> rows, cols;
  for (std::uint32_t rmask = 1; rmask < (1u << m); ++rmask) {
    rows.clear();
    for (std::uint32_t r = 0; r < m; ++r)
      if (rmask >> r & 1u) rows.push_back(r);
    for (std::uint32_t cmask = 1; cmask < (1u << n); ++cmask) {
      cols.clear();
      for (std::uint32_t c = 0; c < n; ++c)
        if (cmask >> c & 1u) cols.push_back(c);
      fn(rows, cols);
    }
  }
}

bool has_zero_line(const BinaryMatrix& s) {
  for (std::size_t r = 0; r < s.rows(); ++r)
    if (s.row_weight(r) == 0) return true;
  for (std::size_t c = 0; c < s.cols(); ++c)
    if (s.col_weight(c) == 0) return true;
  return false;
}

}  // namespace

bool oracle_c1p(const BinaryMatrix& m, const OracleBounds& bounds) {
  require_cols(m, bounds);
  return c1p_unchecked(m);
}

std::optional<TuckerWitness> oracle_min_obstruction(const BinaryMatrix& m, const OracleBounds& bounds) {
  require_dims(m, bounds);
  require_cols(m, bounds);
  if (c1p_unchecked(m)) return std::nullopt;
  std::optional<TuckerWitness> best;
  for_each_submatrix(m.rows(), m.cols(), [&](const auto& rows, const auto& cols) {
    const std::size_t size = rows.size() + cols.size();
    if (best && size > best->size()) return;
    if (rows.size() < 2 || cols.size() < 3) return;  // smaller matrices always have the property
    const BinaryMatrix sub = m.submatrix(rows, cols);
    if (has_zero_line(sub) || c1p_unchecked(sub)) return;
    TuckerWitness w{{}, rows, cols};
    if (best && !witness_less(w, *best)) return;
    best = std::move(w);
  });
  const auto type = classify(m.submatrix(best->rows, best->cols));
  if (!type) throw InternalError("minimum non-C1P submatrix is not a Tucker pattern");
  best->type = *type;
  return best;
}

bool oracle_is_minimal_pattern(const BinaryMatrix& m, const OracleBounds& bounds) {
  require_cols(m, bounds);
  if (c1p_unchecked(m)) return false;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!c1p_unchecked(m.without_row(r))) return false;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!c1p_unchecked(m.without_col(c))) return false;
  return true;
}

PerKindMinimum oracle_min_by_type(const BinaryMatrix& m, const OracleBounds& bounds) {
  require_dims(m, bounds);
  PerKindMinimum best;
  for_each_submatrix(m.rows(), m.cols(), [&](const auto& rows, const auto& cols) {
    if (rows.size() < 3 || cols.size() < 3) return;
    const auto type = classify(m.submatrix(rows, cols));
    if (!type) return;
    auto& slot = best[static_cast<int>(type->kind) - 1];
    TuckerWitness w{*type, rows, cols};
    if (!slot || witness_less(w, *slot)) slot = std::move(w);
  });
  return best;
}

}  // namespace tucker
