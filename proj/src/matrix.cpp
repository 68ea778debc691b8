#include "tucker/matrix.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "tucker/errors.hpp"

namespace tucker {

namespace {

std::size_t words_for(std::size_t cols) { return (cols + 63) / 64; }

std::string_view trim(std::string_view s) {
  const auto is_space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_size(std::string_view tok, std::size_t& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && p == tok.data() + tok.size();
}

BinaryMatrix parse_dense(std::string_view text) {
  std::vector<std::string_view> rows;
  std::vector<std::size_t> row_line;
  bool have_header = false;
  std::size_t header_m = 0, header_n = 0;

  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    std::string_view line = trim(lines[i]);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (have_header || !rows.empty()) throw ParseError(lineno, "header must be the first line");
      auto toks = split_ws(line.substr(1));
      if (toks.size() != 2 || !parse_size(toks[0], header_m) || !parse_size(toks[1], header_n)) {
        throw ParseError(lineno, "malformed header, expected \"# m n\"");
      }
      have_header = true;
      continue;
    }
    for (char ch : line) {
      if (ch != '0' && ch != '1') {
        throw ParseError(lineno, std::string("non-binary symbol '") + ch + "'");
      }
    }
    if (!rows.empty() && line.size() != rows.front().size()) {
      throw ParseError(lineno, "ragged row: expected " + std::to_string(rows.front().size()) +
                                   " columns, found " + std::to_string(line.size()));
    }
    rows.push_back(line);
    row_line.push_back(lineno);
  }

  std::size_t m = rows.size();
  std::size_t n = rows.empty() ? 0 : rows.front().size();
  if (have_header) {
    // An m x 0 matrix has no visible rows.
    if (header_n == 0 && rows.empty()) {
      m = header_m;
    } else if (header_m != m || header_n != n) {
      throw ParseError(1, "header declares " + std::to_string(header_m) + "x" +
                              std::to_string(header_n) + " but body is " + std::to_string(m) +
                              "x" + std::to_string(n));
    }
  }

  BinaryMatrix out(m, n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (rows[r][c] == '1') out.set(r, c);
    }
  }
  return out;
}

BinaryMatrix parse_sparse(std::string_view text) {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::unordered_map<std::string, std::uint32_t> col_index;
  std::unordered_set<std::string> seen_rows;
  std::vector<std::vector<std::uint32_t>> row_cols;

  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    std::string_view line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(lineno, "missing ':' after row label");
    std::string_view label = trim(line.substr(0, colon));
    if (label.empty()) throw ParseError(lineno, "empty row label");
    if (split_ws(label).size() != 1) {
      throw ParseError(lineno, "row label contains whitespace");
    }
    std::string row_name(label);
    if (!seen_rows.insert(row_name).second) {
      throw ParseError(lineno, "duplicate row label '" + row_name + "'");
    }
    std::vector<std::uint32_t> cols;
    for (std::string_view tok : split_ws(line.substr(colon + 1))) {
      if (tok.find(':') != std::string_view::npos) throw ParseError(lineno, "unexpected ':'");
      std::string name(tok);
      auto [it, inserted] = col_index.try_emplace(name, static_cast<std::uint32_t>(col_labels.size()));
      if (inserted) col_labels.push_back(name);
      if (std::find(cols.begin(), cols.end(), it->second) != cols.end()) {
        throw ParseError(lineno, "duplicate column label '" + name + "' in row");
      }
      cols.push_back(it->second);
    }
    row_labels.push_back(std::move(row_name));
    row_cols.push_back(std::move(cols));
  }

  BinaryMatrix out(row_labels.size(), col_labels.size());
  for (std::size_t r = 0; r < row_cols.size(); ++r) {
    for (std::uint32_t c : row_cols[r]) out.set(r, c);
  }
  out.set_row_labels(std::move(row_labels));
  out.set_col_labels(std::move(col_labels));
  return out;
}

}  // namespace

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_(words_for(cols)), bits_(rows * words_for(cols), 0) {}

BinaryMatrix::BinaryMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<int>> v;
  for (const auto& r : rows) v.emplace_back(r);
  *this = from_rows(v);
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  BinaryMatrix out(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n) throw InvalidArgument("ragged row in from_rows");
    for (std::size_t c = 0; c < n; ++c) {
      if (rows[r][c] != 0 && rows[r][c] != 1) throw InvalidArgument("non-binary entry in from_rows");
      if (rows[r][c]) out.set(r, c);
    }
  }
  return out;
}

std::size_t BinaryMatrix::row_weight(std::size_t r) const noexcept {
  std::size_t w = 0;
  for (std::uint64_t word : row_words(r)) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

std::size_t BinaryMatrix::col_weight(std::size_t c) const noexcept {
  std::size_t w = 0;
  for (std::size_t r = 0; r < rows_; ++r) w += get(r, c);
  return w;
}

std::string BinaryMatrix::row_label(std::size_t r) const {
  return row_labels_.empty() ? "r" + std::to_string(r) : row_labels_[r];
}

std::string BinaryMatrix::col_label(std::size_t c) const {
  return col_labels_.empty() ? "c" + std::to_string(c) : col_labels_[c];
}

void BinaryMatrix::set_row_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != rows_) throw InvalidArgument("row label count mismatch");
  row_labels_ = std::move(labels);
}

void BinaryMatrix::set_col_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != cols_) throw InvalidArgument("column label count mismatch");
  col_labels_ = std::move(labels);
}

BinaryMatrix BinaryMatrix::submatrix(std::span<const std::uint32_t> rows,
                                     std::span<const std::uint32_t> cols) const {
  BinaryMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (get(rows[i], cols[j])) out.set(i, j);
    }
  }
  if (!row_labels_.empty()) {
    std::vector<std::string> labels;
    for (auto r : rows) labels.push_back(row_labels_[r]);
    out.row_labels_ = std::move(labels);
  }
  if (!col_labels_.empty()) {
    std::vector<std::string> labels;
    for (auto c : cols) labels.push_back(col_labels_[c]);
    out.col_labels_ = std::move(labels);
  }
  return out;
}

BinaryMatrix BinaryMatrix::without_row(std::size_t r) const {
  std::vector<std::uint32_t> rows, cols;
  for (std::uint32_t i = 0; i < rows_; ++i)
    if (i != r) rows.push_back(i);
  for (std::uint32_t j = 0; j < cols_; ++j) cols.push_back(j);
  return submatrix(rows, cols);
}

BinaryMatrix BinaryMatrix::without_col(std::size_t c) const {
  std::vector<std::uint32_t> rows, cols;
  for (std::uint32_t i = 0; i < rows_; ++i) rows.push_back(i);
  for (std::uint32_t j = 0; j < cols_; ++j)
    if (j != c) cols.push_back(j);
  return submatrix(rows, cols);
}

BinaryMatrix BinaryMatrix::transposed() const {
  BinaryMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) out.set(c, r);
  out.row_labels_ = col_labels_;
  out.col_labels_ = row_labels_;
  return out;
}

bool BinaryMatrix::same_bits(const BinaryMatrix& other) const noexcept {
  return rows_ == other.rows_ && cols_ == other.cols_ && bits_ == other.bits_;
}

std::vector<std::vector<int>> BinaryMatrix::to_rows() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_, 0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = get(r, c) ? 1 : 0;
  return out;
}

MatrixStats stats(const BinaryMatrix& m) {
  MatrixStats s;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const std::size_t w = m.row_weight(r);
    s.ones += w;
    s.max_row_weight = std::max(s.max_row_weight, w);
  }
  return s;
}

BinaryMatrix parse_matrix(std::string_view text, MatrixFormat format) {
  return format == MatrixFormat::Dense ? parse_dense(text) : parse_sparse(text);
}

BinaryMatrix load_matrix(const std::filesystem::path& path, MatrixFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failure on " + path.string());
  return parse_matrix(buf.str(), format);
}

std::string serialize_matrix(const BinaryMatrix& m, MatrixFormat format) {
  std::string out;
  if (format == MatrixFormat::Dense) {
    out += "# " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    if (m.cols() == 0) return out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) out += m.get(r, c) ? '1' : '0';
      out += '\n';
    }
    return out;
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += m.row_label(r);
    out += ':';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.get(r, c)) {
        out += ' ';
        out += m.col_label(c);
      }
    }
    out += '\n';
  }
  return out;
}

Normalization normalize(const BinaryMatrix& m) {
  Normalization result;
  for (std::uint32_t r = 0; r < m.rows(); ++r) {
    (m.row_weight(r) ? result.row_origin : result.removed_rows).push_back(r);
  }
  for (std::uint32_t c = 0; c < m.cols(); ++c) {
    (m.col_weight(c) ? result.col_origin : result.removed_cols).push_back(c);
  }
  result.matrix = m.submatrix(result.row_origin, result.col_origin);
  return result;
}

}  // namespace tucker
