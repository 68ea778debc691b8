#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tucker/bigraph.hpp"
#include "tucker/matrix.hpp"

namespace tucker {

enum class TuckerKind : std::uint8_t { I = 1, II = 2, III = 3, IV = 4, V = 5 };

inline constexpr std::array<TuckerKind, 5> kAllKinds = {TuckerKind::I, TuckerKind::II, TuckerKind::III,
                                                        TuckerKind::IV, TuckerKind::V};

std::string_view kind_name(TuckerKind kind) noexcept;
std::optional<TuckerKind> parse_kind(std::string_view name) noexcept;

// Family member. k is 1 for IV and V.
struct TuckerType {
  TuckerKind kind = TuckerKind::I;
  int k = 1;

  bool operator==(const TuckerType&) const = default;
};

std::string to_string(TuckerType t);

// Small set of kinds, e.g. the kinds a supersession report names.
class KindSet {
 public:
  constexpr KindSet() = default;
  constexpr KindSet(std::initializer_list<TuckerKind> kinds) {
    for (auto k : kinds) insert(k);
  }
  constexpr void insert(TuckerKind k) noexcept { bits_ |= bit(k); }
  constexpr bool contains(TuckerKind k) const noexcept { return (bits_ & bit(k)) != 0; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::uint32_t bits() const noexcept { return bits_; }
  static constexpr KindSet from_bits(std::uint32_t b) noexcept {
    KindSet s;
    s.bits_ = b & 0x3eu;
    return s;
  }
  constexpr bool operator==(const KindSet&) const = default;

 private:
  static constexpr std::uint32_t bit(TuckerKind k) noexcept { return 1u << static_cast<unsigned>(k); }
  std::uint32_t bits_ = 0;
};

std::string to_string(KindSet s);

// A forbidden pattern as a bipartite graph; rows are black.
struct PatternGraph {
  TuckerType type;
  std::vector<std::string> row_names;
  std::vector<std::string> col_names;
  std::vector<Edge> edges;

  std::size_t rows() const noexcept { return row_names.size(); }
  std::size_t cols() const noexcept { return col_names.size(); }
  BinaryMatrix to_matrix() const;
};

// Canonical member of a family. Throws InvalidArgument for k < 1, or k != 1
// for IV and V.
PatternGraph generate(TuckerType type);
BinaryMatrix pattern_matrix(TuckerType type);

// Vertex count of the pattern: 2k+4, 2k+6, 2k+5, 10, 9.
std::size_t pattern_size(TuckerType type);

// The type whose pattern is isomorphic to `sub` with rows mapped to rows,
// or nullopt.
std::optional<TuckerType> classify(const BinaryMatrix& sub);

// Throws InvalidArgument when k is out of range for the kind.
void validate(TuckerType type);

}  // namespace tucker
