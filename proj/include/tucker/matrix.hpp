#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tucker {

enum class MatrixFormat { Dense, Sparse };

// Dense bit-packed binary matrix. Rows are stored as 64-bit words so that a
// single entry test is one shift and mask. Labels are optional; when absent
// the defaults "r<i>" / "c<j>" (0-based) are reported.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols);
  BinaryMatrix(std::initializer_list<std::initializer_list<int>> rows);

  static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const noexcept {
    return (bits_[r * words_per_row_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool value = true) noexcept {
    std::uint64_t& word = bits_[r * words_per_row_ + (c >> 6)];
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    word = value ? (word | mask) : (word & ~mask);
  }

  std::size_t row_weight(std::size_t r) const noexcept;
  std::size_t col_weight(std::size_t c) const noexcept;
  std::span<const std::uint64_t> row_words(std::size_t r) const noexcept {
    return {bits_.data() + r * words_per_row_, words_per_row_};
  }

  bool has_row_labels() const noexcept { return !row_labels_.empty(); }
  bool has_col_labels() const noexcept { return !col_labels_.empty(); }
  std::string row_label(std::size_t r) const;
  std::string col_label(std::size_t c) const;
  void set_row_labels(std::vector<std::string> labels);
  void set_col_labels(std::vector<std::string> labels);

  // Labels follow the selected rows/columns.
  BinaryMatrix submatrix(std::span<const std::uint32_t> rows,
                         std::span<const std::uint32_t> cols) const;
  BinaryMatrix without_row(std::size_t r) const;
  BinaryMatrix without_col(std::size_t c) const;
  BinaryMatrix transposed() const;

  // Bit equality; labels are ignored.
  bool same_bits(const BinaryMatrix& other) const noexcept;
  std::vector<std::vector<int>> to_rows() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

struct MatrixStats {
  std::size_t ones = 0;            // e, the edge count of G(M)
  std::size_t max_row_weight = 0;  // Delta
};

MatrixStats stats(const BinaryMatrix& m);

// Dense text: one row per line of '0'/'1', optional "# m n" header.
// Sparse row list: "rowlabel: collabel collabel ...". Throws ParseError.
BinaryMatrix parse_matrix(std::string_view text, MatrixFormat format);
BinaryMatrix load_matrix(const std::filesystem::path& path, MatrixFormat format);
std::string serialize_matrix(const BinaryMatrix& m, MatrixFormat format);

// All-zero rows and columns removed. row_origin[i] is the input index of
// surviving row i.
struct Normalization {
  BinaryMatrix matrix;
  std::vector<std::uint32_t> row_origin;
  std::vector<std::uint32_t> col_origin;
  std::vector<std::uint32_t> removed_rows;
  std::vector<std::uint32_t> removed_cols;

  bool trivially_c1p() const noexcept { return matrix.rows() == 0 || matrix.cols() == 0; }
};

Normalization normalize(const BinaryMatrix& m);

}  // namespace tucker
