#pragma once

#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bitarm/bitmatrix.hpp"
#include "bitarm/error.hpp"

namespace bitarm {

class DatasetError : public Error {
 public:
  enum class Kind { ParseError, RaggedRow, ValueOutOfRange, DuplicateId, EmptyMatrix,
                    NonNumericCell };

  DatasetError(Kind kind, const std::string& message);
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// Probe patterns (rows) x genes (columns) of Jaccard similarities in [0, 1].
// Immutable after construction.
class SimilarityMatrix {
 public:
  // values is row-major, |row_ids| * |col_ids| long. Throws DatasetError.
  SimilarityMatrix(std::vector<std::string> row_ids, std::vector<std::string> col_ids,
                   std::vector<double> values);

  std::size_t n_rows() const noexcept { return row_ids_.size(); }
  std::size_t n_cols() const noexcept { return col_ids_.size(); }
  const std::vector<std::string>& row_ids() const noexcept { return row_ids_; }
  const std::vector<std::string>& col_ids() const noexcept { return col_ids_; }

  double at(std::size_t row, std::size_t col) const { return values_[row * n_cols() + col]; }
  std::span<const double> values() const noexcept { return values_; }
  double max_value() const noexcept { return max_value_; }

  friend bool operator==(const SimilarityMatrix&, const SimilarityMatrix&) = default;

 private:
  std::vector<std::string> row_ids_;
  std::vector<std::string> col_ids_;
  std::vector<double> values_;
  double max_value_ = 0.0;
};

// CSV: header "<anything>,gene1,gene2,...", then "probe,v1,v2,..." per row.
// Reads the stream exactly once, front to back.
SimilarityMatrix parse_similarity_matrix(std::istream& in);
SimilarityMatrix parse_similarity_matrix(std::string_view text);

// Shortest round-trip decimal form; parse(serialize(m)) == m.
std::string serialize_similarity_matrix(const SimilarityMatrix& m,
                                        std::string_view corner = "probe");

struct DiscretizeConfig {
  enum class Method { max_minus_x, beta_threshold };

  Method method = Method::max_minus_x;
  double x = 25.0;     // percent, max_minus_x only
  double beta = 0.0;   // beta_threshold only

  static DiscretizeConfig max_minus(double x_percent);
  static DiscretizeConfig threshold(double beta);
  // "max-minus-x:<x>" or "beta:<b>". Throws ConfigError.
  static DiscretizeConfig parse(std::string_view spec);
  std::string to_string() const;
  void validate() const;
};

// Cell -> 1 iff value > (1 - x/100) * HV, HV the global maximum.
BitMatrix discretize_max_minus_x(const SimilarityMatrix& m, double x_percent);
// Cell -> 1 iff value > beta.
BitMatrix discretize_beta(const SimilarityMatrix& m, double beta);
BitMatrix discretize(const SimilarityMatrix& m, const DiscretizeConfig& cfg);

}  // namespace bitarm
