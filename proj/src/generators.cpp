#include "tucker/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "tucker/errors.hpp"

namespace tucker {

namespace {

double unit(std::mt19937_64& rng) { return std::generate_canonical<double, 53>(rng); }

}  // namespace

BinaryMatrix random_matrix(std::size_t rows, std::size_t cols, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) throw InvalidArgument("density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  BinaryMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (unit(rng) < density) m.set(r, c);
  return m;
}

BinaryMatrix random_c1p_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BinaryMatrix m(rows, cols);
  if (cols == 0) return m;
  std::vector<std::uint32_t> perm(cols);
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<std::size_t> pick(0, cols - 1);
  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a > b) std::swap(a, b);
    for (std::size_t c = a; c <= b; ++c) m.set(r, perm[c]);
  }
  return m;
}

PlantedMatrix planted_matrix(TuckerType type, std::size_t rows, std::size_t cols, std::uint64_t seed) {
  const BinaryMatrix pat = pattern_matrix(type);
  if (rows < pat.rows() || cols < pat.cols()) {
    throw InvalidArgument("a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix cannot hold " +
                          to_string(type));
  }
  std::mt19937_64 rng(seed);
  const std::size_t pr = rows - pat.rows(), pc = cols - pat.cols();
  const BinaryMatrix pad = random_c1p_matrix(pr, pc, rng());

  std::vector<std::uint32_t> row_perm(rows), col_perm(cols);
  std::iota(row_perm.begin(), row_perm.end(), 0u);
  std::iota(col_perm.begin(), col_perm.end(), 0u);
  std::shuffle(row_perm.begin(), row_perm.end(), rng);
  std::shuffle(col_perm.begin(), col_perm.end(), rng);

  PlantedMatrix out{BinaryMatrix(rows, cols), {}, {}};
  for (std::size_t r = 0; r < pat.rows(); ++r)
    for (std::size_t c = 0; c < pat.cols(); ++c)
      if (pat.get(r, c)) out.matrix.set(row_perm[r], col_perm[c]);
  for (std::size_t r = 0; r < pr; ++r)
    for (std::size_t c = 0; c < pc; ++c)
      if (pad.get(r, c)) out.matrix.set(row_perm[pat.rows() + r], col_perm[pat.cols() + c]);
  out.rows.assign(row_perm.begin(), row_perm.begin() + static_cast<std::ptrdiff_t>(pat.rows()));
  out.cols.assign(col_perm.begin(), col_perm.begin() + static_cast<std::ptrdiff_t>(pat.cols()));
  std::sort(out.rows.begin(), out.rows.end());
  std::sort(out.cols.begin(), out.cols.end());
  return out;
}

}  // namespace tucker
