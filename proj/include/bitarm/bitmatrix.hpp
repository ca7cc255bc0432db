#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bitarm/error.hpp"
#include "bitarm/itemset.hpp"

namespace bitarm {

class BitMatrixError : public Error {
 public:
  enum class Kind { IndexOutOfRange, DeadColumn, DeadRow, DuplicateIndex, TooFewIndices, AlreadyDead,
                    ShapeMismatch };

  BitMatrixError(Kind kind, const std::string& message);
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// Fixed-length packed bit vector. Padding bits past size() are kept at zero so
// count() is exact.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t length, bool value = false);

  // '1' and '0' characters, position 0 first.
  static BitVector from_string(std::string_view bits);
  std::string to_string() const;

  std::size_t size() const noexcept { return length_; }
  bool test(std::size_t pos) const;
  void set(std::size_t pos, bool value = true);
  std::size_t count() const noexcept;

  std::span<const Word> words() const noexcept { return words_; }

  BitVector& operator&=(const BitVector& other);
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<Word> words_;
};

// popcount(a & b) without materialising the intersection.
std::size_t and_count(const BitVector& a, const BitVector& b);

// Column-major Boolean matrix: one BitVector per item (column), one bit per
// transaction (row). Rows and columns can be pruned; pruned rows are masked out
// of every count.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::vector<std::string> row_ids, std::vector<std::string> col_ids);

  // Test helper: each string is one row, e.g. {"110", "011"}. Ids default to
  // r0.. and c0.. when not given.
  static BitMatrix from_rows(std::span<const std::string> rows,
                             std::vector<std::string> col_ids = {});

  std::size_t n_rows() const noexcept { return row_ids_.size(); }
  std::size_t n_cols() const noexcept { return col_ids_.size(); }
  const std::vector<std::string>& row_ids() const noexcept { return row_ids_; }
  const std::vector<std::string>& col_ids() const noexcept { return col_ids_; }

  bool bit(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, bool value = true);

  const BitVector& column(std::size_t col) const;
  const BitVector& live_rows() const noexcept { return live_rows_; }
  bool column_live(std::size_t col) const;
  bool row_live(std::size_t row) const;
  std::size_t live_row_count() const noexcept { return live_rows_.count(); }
  std::size_t live_column_count() const noexcept;

  std::size_t column_sum(std::size_t col) const;
  std::size_t row_sum(std::size_t row) const;

  // AND of >= 2 distinct live columns, restricted to live rows.
  BitVector and_columns(std::span<const ItemIndex> cols) const;

  // Live-row support count of any itemset; the empty itemset counts live rows.
  std::size_t support_count(std::span<const ItemIndex> cols) const;

  void prune_column(std::size_t col);
  void prune_row(std::size_t row);

 private:
  void check_col(std::size_t col) const;
  void check_row(std::size_t row) const;

  std::vector<std::string> row_ids_;
  std::vector<std::string> col_ids_;
  std::vector<BitVector> columns_;
  BitVector live_rows_;
  std::vector<bool> live_cols_;
};

}  // namespace bitarm
