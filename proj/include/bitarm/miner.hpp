#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bitarm/bitmatrix.hpp"
#include "bitarm/error.hpp"
#include "bitarm/itemset.hpp"

namespace bitarm {

class MiningError : public Error {
 public:
  enum class Kind { EmptyInput, InvalidConfig };

  MiningError(Kind kind, const std::string& message);
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

struct MiningConfig {
  double min_support = 0.05;          // relative, (0, 1]
  std::optional<std::size_t> max_k;   // level cap
  // Enumerate every k-combination of live columns instead of joining F(k-1).
  bool strict_paper = false;
  unsigned threads = 1;

  void validate() const;
};

// Per-level trace of the pruning schedule.
struct LevelTrace {
  std::size_t k = 0;
  std::size_t candidates = 0;        // combinations whose support was counted
  std::size_t frequent = 0;
  std::size_t columns_pruned = 0;    // after this level
  std::size_t rows_pruned = 0;       // after this level
  std::size_t live_columns = 0;      // after pruning
  std::size_t live_rows = 0;         // after pruning
};

struct MiningStats {
  std::size_t min_count = 0;
  std::vector<LevelTrace> levels;
  std::size_t total_candidates = 0;
  // Largest number of candidate itemsets resident at once. Candidates are
  // counted as they are generated, so this is one per worker.
  std::size_t peak_resident_candidates = 0;
  std::size_t peak_candidate_bytes = 0;
};

// ceil(min_support * n_rows), at least 1. Products within 1e-9 of an integer
// are treated as that integer so decimal thresholds like 0.1 * 30 give 3.
std::size_t to_absolute_support(double min_support, std::size_t n_rows);

// Frequent itemsets of b by column-AND support counting with row and column
// pruning between levels. b is taken by value; pruning never touches the
// caller's matrix. Support is fixed against b's row count before any pruning.
FrequentItemsets mine(BitMatrix b, const MiningConfig& cfg, MiningStats* stats = nullptr);

}  // namespace bitarm
