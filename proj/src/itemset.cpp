#include "bitarm/itemset.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

#include "bitarm/error.hpp"

namespace bitarm {

bool is_canonical(std::span<const ItemIndex> items) {
  return std::adjacent_find(items.begin(), items.end(),
                            [](ItemIndex a, ItemIndex b) { return a >= b; }) == items.end();
}

bool is_subset(std::span<const ItemIndex> sub, std::span<const ItemIndex> super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

Itemset set_difference(std::span<const ItemIndex> a, std::span<const ItemIndex> b) {
  Itemset out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Itemset set_union(std::span<const ItemIndex> a, std::span<const ItemIndex> b) {
  Itemset out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

FrequentItemsets::FrequentItemsets(std::vector<std::string> item_ids, std::size_t n_transactions,
                                   std::size_t min_count)
    : item_ids_(std::move(item_ids)), n_transactions_(n_transactions), min_count_(min_count) {}

void FrequentItemsets::add_level(std::vector<CountedItemset> itemsets) {
  if (itemsets.empty()) return;  // catalogs never end in an empty level
  const std::size_t k = levels_.size() + 1;
  for (const auto& s : itemsets) {
    if (s.items.size() != k || !is_canonical(s.items)) {
      throw Error(ErrorCategory::internal, "BadLevel",
                  fmt::format("itemset of size {} added to level {}", s.items.size(), k));
    }
  }
  std::sort(itemsets.begin(), itemsets.end());
  levels_.push_back(std::move(itemsets));
}

std::span<const CountedItemset> FrequentItemsets::level(std::size_t k) const {
  if (k == 0 || k > levels_.size()) return {};
  return levels_[k - 1];
}

std::size_t FrequentItemsets::size() const noexcept {
  std::size_t total = 0;
  for (const auto& l : levels_) total += l.size();
  return total;
}

std::optional<std::size_t> FrequentItemsets::support_of(std::span<const ItemIndex> items) const {
  auto lvl = level(items.size());
  auto it = std::lower_bound(lvl.begin(), lvl.end(), items,
                             [](const CountedItemset& s, std::span<const ItemIndex> key) {
                               return std::lexicographical_compare(s.items.begin(), s.items.end(),
                                                                   key.begin(), key.end());
                             });
  if (it == lvl.end() || !std::equal(it->items.begin(), it->items.end(), items.begin(), items.end()))
    return std::nullopt;
  return it->support;
}

std::vector<CountedItemset> FrequentItemsets::all() const {
  std::vector<CountedItemset> out;
  out.reserve(size());
  for (const auto& l : levels_) out.insert(out.end(), l.begin(), l.end());
  return out;
}

std::string FrequentItemsets::item_label(ItemIndex i) const {
  if (i < item_ids_.size()) return item_ids_[i];
  return fmt::format("#{}", i);
}

std::string FrequentItemsets::format(std::span<const ItemIndex> items, std::string_view sep) const {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += item_label(items[i]);
  }
  return out;
}

bool operator==(const FrequentItemsets& a, const FrequentItemsets& b) {
  return a.levels_ == b.levels_;
}

}  // namespace bitarm
