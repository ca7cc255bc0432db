#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bitarm {

using ItemIndex = std::uint32_t;

// Sorted ascending, duplicate-free list of column indices.
using Itemset = std::vector<ItemIndex>;

struct CountedItemset {
  Itemset items;
  std::size_t support = 0;  // absolute count

  friend bool operator==(const CountedItemset&, const CountedItemset&) = default;
  friend auto operator<=>(const CountedItemset&, const CountedItemset&) = default;
};

bool is_canonical(std::span<const ItemIndex> items);
bool is_subset(std::span<const ItemIndex> sub, std::span<const ItemIndex> super);
Itemset set_difference(std::span<const ItemIndex> a, std::span<const ItemIndex> b);
Itemset set_union(std::span<const ItemIndex> a, std::span<const ItemIndex> b);

// Leveled catalog F = F1 u F2 u ... u Fk. Level k holds itemsets of size k in
// lexicographic order.
class FrequentItemsets {
 public:
  FrequentItemsets() = default;
  FrequentItemsets(std::vector<std::string> item_ids, std::size_t n_transactions,
                   std::size_t min_count);

  // Appends level size()+1. Itemsets must have that size; they are sorted on
  // insertion.
  void add_level(std::vector<CountedItemset> itemsets);

  std::size_t max_level() const noexcept { return levels_.size(); }
  // 1-based level accessor; returns an empty span past the last level.
  std::span<const CountedItemset> level(std::size_t k) const;
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  std::optional<std::size_t> support_of(std::span<const ItemIndex> items) const;
  std::vector<CountedItemset> all() const;

  const std::vector<std::string>& item_ids() const noexcept { return item_ids_; }
  std::size_t n_transactions() const noexcept { return n_transactions_; }
  std::size_t min_count() const noexcept { return min_count_; }

  std::string item_label(ItemIndex i) const;
  std::string format(std::span<const ItemIndex> items, std::string_view sep = ";") const;

  // Equality compares itemsets and counts only.
  friend bool operator==(const FrequentItemsets& a, const FrequentItemsets& b);

 private:
  std::vector<std::string> item_ids_;
  std::size_t n_transactions_ = 0;
  std::size_t min_count_ = 1;
  std::vector<std::vector<CountedItemset>> levels_;
};

}  // namespace bitarm
