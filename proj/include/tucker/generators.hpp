#pragma once

#include <cstdint>
#include <vector>

#include "tucker/matrix.hpp"
#include "tucker/patterns.hpp"

namespace tucker {

// Independent Bernoulli(density) entries from a 64-bit Mersenne twister.
BinaryMatrix random_matrix(std::size_t rows, std::size_t cols, double density, std::uint64_t seed);

// Random interval rows over a fixed column order, then columns shuffled.
// Always has the consecutive ones property.
BinaryMatrix random_c1p_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed);

struct PlantedMatrix {
  BinaryMatrix matrix;
  std::vector<std::uint32_t> rows;  // where the pattern landed, sorted
  std::vector<std::uint32_t> cols;
};

// A pattern and a disjoint interval block on a block diagonal, padded to
// rows x cols, with rows and columns shuffled. Throws InvalidArgument when
// the pattern does not fit.
PlantedMatrix planted_matrix(TuckerType type, std::size_t rows, std::size_t cols, std::uint64_t seed);

}  // namespace tucker
