#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bitarm/bitmatrix.hpp"
#include "bitarm/error.hpp"
#include "bitarm/itemset.hpp"

namespace bitarm {

class OracleError : public Error {
 public:
  enum class Kind { TooManyItems, InvalidInput };

  OracleError(Kind kind, const std::string& message);
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// Horizontal view of a BitMatrix: one sorted item list per row.
struct TransactionSet {
  std::vector<Itemset> transactions;
  std::size_t n_items = 0;
  std::vector<std::string> item_ids;

  static TransactionSet from_bitmatrix(const BitMatrix& b);
};

struct AprioriStats {
  std::size_t database_scans = 0;
  std::size_t total_candidates = 0;
  std::size_t peak_resident_candidates = 0;
  std::size_t peak_candidate_bytes = 0;
};

// Textbook level-wise Apriori: join F(k-1), prune by subsets, one database
// scan per level to count candidates.
FrequentItemsets apriori_mine(const TransactionSet& t, std::size_t min_count,
                              AprioriStats* stats = nullptr);

inline constexpr std::size_t kBruteForceMaxItems = 20;

// Counts every one of the 2^n - 1 itemsets. Throws TooManyItems past 20 items.
FrequentItemsets brute_force_mine(const TransactionSet& t, std::size_t min_count);

}  // namespace bitarm
