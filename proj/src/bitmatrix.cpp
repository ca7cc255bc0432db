#include "bitarm/bitmatrix.hpp"

#include <algorithm>
#include <bit>

#include <fmt/format.h>

namespace bitarm {

namespace {

std::string_view kind_name(BitMatrixError::Kind kind) {
  switch (kind) {
    case BitMatrixError::Kind::IndexOutOfRange: return "IndexOutOfRange";
    case BitMatrixError::Kind::DeadColumn: return "DeadColumn";
    case BitMatrixError::Kind::DeadRow: return "DeadRow";
    case BitMatrixError::Kind::DuplicateIndex: return "DuplicateIndex";
    case BitMatrixError::Kind::TooFewIndices: return "TooFewIndices";
    case BitMatrixError::Kind::AlreadyDead: return "AlreadyDead";
    case BitMatrixError::Kind::ShapeMismatch: return "ShapeMismatch";
  }
  return "BitMatrixError";
}

std::size_t word_count(std::size_t bits) {
  return (bits + BitVector::kWordBits - 1) / BitVector::kWordBits;
}

}  // namespace

BitMatrixError::BitMatrixError(Kind kind, const std::string& message)
    : Error(ErrorCategory::internal, std::string(kind_name(kind)), message), kind_(kind) {}

// ---------------------------------------------------------------------------
// BitVector

BitVector::BitVector(std::size_t length, bool value)
    : length_(length), words_(word_count(length), value ? ~Word{0} : Word{0}) {
  if (value && length % kWordBits != 0) {
    words_.back() &= (Word{1} << (length % kWordBits)) - 1;
  }
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw BitMatrixError(BitMatrixError::Kind::ShapeMismatch,
                           fmt::format("invalid bit character '{}'", bits[i]));
    }
  }
  return v;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

bool BitVector::test(std::size_t pos) const {
  if (pos >= length_)
    throw BitMatrixError(BitMatrixError::Kind::IndexOutOfRange,
                         fmt::format("bit {} out of range ({})", pos, length_));
  return (words_[pos / kWordBits] >> (pos % kWordBits)) & 1U;
}

void BitVector::set(std::size_t pos, bool value) {
  if (pos >= length_)
    throw BitMatrixError(BitMatrixError::Kind::IndexOutOfRange,
                         fmt::format("bit {} out of range ({})", pos, length_));
  const Word mask = Word{1} << (pos % kWordBits);
  if (value) {
    words_[pos / kWordBits] |= mask;
  } else {
    words_[pos / kWordBits] &= ~mask;
  }
}

std::size_t BitVector::count() const noexcept {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  if (other.length_ != length_)
    throw BitMatrixError(BitMatrixError::Kind::ShapeMismatch,
                         fmt::format("AND of vectors of length {} and {}", length_, other.length_));
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::size_t and_count(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size())
    throw BitMatrixError(BitMatrixError::Kind::ShapeMismatch,
                         fmt::format("AND of vectors of length {} and {}", a.size(), b.size()));
  auto wa = a.words();
  auto wb = b.words();
  std::size_t n = 0;
  for (std::size_t i = 0; i < wa.size(); ++i)
    n += static_cast<std::size_t>(std::popcount(wa[i] & wb[i]));
  return n;
}

// ---------------------------------------------------------------------------
// BitMatrix

BitMatrix::BitMatrix(std::vector<std::string> row_ids, std::vector<std::string> col_ids)
    : row_ids_(std::move(row_ids)),
      col_ids_(std::move(col_ids)),
      columns_(col_ids_.size(), BitVector(row_ids_.size())),
      live_rows_(row_ids_.size(), true),
      live_cols_(col_ids_.size(), true) {}

BitMatrix BitMatrix::from_rows(std::span<const std::string> rows, std::vector<std::string> col_ids) {
  const std::size_t cols = rows.empty() ? col_ids.size() : rows.front().size();
  if (col_ids.empty()) {
    for (std::size_t c = 0; c < cols; ++c) col_ids.push_back(fmt::format("c{}", c));
  }
  if (col_ids.size() != cols)
    throw BitMatrixError(BitMatrixError::Kind::ShapeMismatch, "column id count mismatch");
  std::vector<std::string> row_ids;
  for (std::size_t r = 0; r < rows.size(); ++r) row_ids.push_back(fmt::format("r{}", r));

  BitMatrix m(std::move(row_ids), std::move(col_ids));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw BitMatrixError(BitMatrixError::Kind::ShapeMismatch,
                           fmt::format("row {} has {} bits, expected {}", r, rows[r].size(), cols));
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] == '1') {
        m.set(r, c);
      } else if (rows[r][c] != '0') {
        throw BitMatrixError(BitMatrixError::Kind::ShapeMismatch,
                             fmt::format("invalid bit character '{}'", rows[r][c]));
      }
    }
  }
  return m;
}

void BitMatrix::check_col(std::size_t col) const {
  if (col >= n_cols())
    throw BitMatrixError(BitMatrixError::Kind::IndexOutOfRange,
                         fmt::format("column {} out of range ({})", col, n_cols()));
}

void BitMatrix::check_row(std::size_t row) const {
  if (row >= n_rows())
    throw BitMatrixError(BitMatrixError::Kind::IndexOutOfRange,
                         fmt::format("row {} out of range ({})", row, n_rows()));
}

bool BitMatrix::bit(std::size_t row, std::size_t col) const {
  check_col(col);
  return columns_[col].test(row);
}

void BitMatrix::set(std::size_t row, std::size_t col, bool value) {
  check_col(col);
  check_row(row);
  columns_[col].set(row, value);
}

const BitVector& BitMatrix::column(std::size_t col) const {
  check_col(col);
  return columns_[col];
}

bool BitMatrix::column_live(std::size_t col) const {
  check_col(col);
  return live_cols_[col];
}

bool BitMatrix::row_live(std::size_t row) const {
  check_row(row);
  return live_rows_.test(row);
}

std::size_t BitMatrix::live_column_count() const noexcept {
  return static_cast<std::size_t>(std::count(live_cols_.begin(), live_cols_.end(), true));
}

std::size_t BitMatrix::column_sum(std::size_t col) const {
  check_col(col);
  if (!live_cols_[col])
    throw BitMatrixError(BitMatrixError::Kind::DeadColumn, fmt::format("column {} is pruned", col));
  return and_count(columns_[col], live_rows_);
}

std::size_t BitMatrix::row_sum(std::size_t row) const {
  check_row(row);
  if (!live_rows_.test(row))
    throw BitMatrixError(BitMatrixError::Kind::DeadRow, fmt::format("row {} is pruned", row));
  std::size_t n = 0;
  for (std::size_t c = 0; c < n_cols(); ++c)
    if (live_cols_[c] && columns_[c].test(row)) ++n;
  return n;
}

BitVector BitMatrix::and_columns(std::span<const ItemIndex> cols) const {
  if (cols.size() < 2)
    throw BitMatrixError(BitMatrixError::Kind::TooFewIndices,
                         fmt::format("and_columns needs at least 2 columns, got {}", cols.size()));
  std::vector<ItemIndex> sorted(cols.begin(), cols.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw BitMatrixError(BitMatrixError::Kind::DuplicateIndex, "and_columns given a repeated column");
  BitVector acc = live_rows_;
  for (ItemIndex c : sorted) {
    check_col(c);
    if (!live_cols_[c])
      throw BitMatrixError(BitMatrixError::Kind::DeadColumn, fmt::format("column {} is pruned", c));
    acc &= columns_[c];
  }
  return acc;
}

std::size_t BitMatrix::support_count(std::span<const ItemIndex> cols) const {
  for (ItemIndex c : cols) check_col(c);
  if (cols.empty()) return live_row_count();
  if (cols.size() == 1) return and_count(columns_[cols[0]], live_rows_);
  BitVector acc = live_rows_;
  for (ItemIndex c : cols) acc &= columns_[c];
  return acc.count();
}

void BitMatrix::prune_column(std::size_t col) {
  check_col(col);
  if (!live_cols_[col])
    throw BitMatrixError(BitMatrixError::Kind::AlreadyDead, fmt::format("column {} already pruned", col));
  live_cols_[col] = false;
}

void BitMatrix::prune_row(std::size_t row) {
  check_row(row);
  if (!live_rows_.test(row))
    throw BitMatrixError(BitMatrixError::Kind::AlreadyDead, fmt::format("row {} already pruned", row));
  live_rows_.set(row, false);
}

}  // namespace bitarm
