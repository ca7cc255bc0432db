#include "bitarm/oracle.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>

namespace bitarm {

namespace {

std::string_view kind_name(OracleError::Kind kind) {
  switch (kind) {
    case OracleError::Kind::TooManyItems: return "TooManyItems";
    case OracleError::Kind::InvalidInput: return "InvalidInput";
  }
  return "OracleError";
}

void check_input(const TransactionSet& t, std::size_t min_count) {
  if (min_count == 0) throw OracleError(OracleError::Kind::InvalidInput, "min_count must be >= 1");
  for (const auto& tx : t.transactions) {
    if (!is_canonical(tx) || (!tx.empty() && tx.back() >= t.n_items))
      throw OracleError(OracleError::Kind::InvalidInput, "transaction is not a sorted item set");
  }
}

}  // namespace

OracleError::OracleError(Kind kind, const std::string& message)
    : Error(ErrorCategory::validation, std::string(kind_name(kind)), message), kind_(kind) {}

TransactionSet TransactionSet::from_bitmatrix(const BitMatrix& b) {
  TransactionSet t;
  t.n_items = b.n_cols();
  t.item_ids = b.col_ids();
  t.transactions.resize(b.n_rows());
  for (std::size_t r = 0; r < b.n_rows(); ++r)
    for (std::size_t c = 0; c < b.n_cols(); ++c)
      if (b.bit(r, c)) t.transactions[r].push_back(static_cast<ItemIndex>(c));
  return t;
}

FrequentItemsets apriori_mine(const TransactionSet& t, std::size_t min_count, AprioriStats* stats) {
  check_input(t, min_count);
  FrequentItemsets out(t.item_ids, t.transactions.size(), min_count);
  AprioriStats local;

  auto note_candidates = [&](std::size_t count, std::size_t k) {
    local.total_candidates += count;
    local.peak_resident_candidates = std::max(local.peak_resident_candidates, count);
    local.peak_candidate_bytes =
        std::max(local.peak_candidate_bytes, count * (k * sizeof(ItemIndex) + sizeof(std::size_t)));
  };

  // L1: one scan.
  std::vector<std::size_t> item_counts(t.n_items, 0);
  ++local.database_scans;
  for (const auto& tx : t.transactions)
    for (ItemIndex i : tx) ++item_counts[i];
  note_candidates(t.n_items, 1);
  std::vector<CountedItemset> previous;
  for (std::size_t i = 0; i < t.n_items; ++i)
    if (item_counts[i] >= min_count) previous.push_back({{static_cast<ItemIndex>(i)}, item_counts[i]});

  for (std::size_t k = 2; !previous.empty(); ++k) {
    out.add_level(previous);

    // Join step: pairs sharing the first k-2 items.
    std::vector<Itemset> candidates;
    for (std::size_t i = 0; i < previous.size(); ++i) {
      for (std::size_t j = i + 1; j < previous.size(); ++j) {
        const auto& a = previous[i].items;
        const auto& b = previous[j].items;
        if (!std::equal(a.begin(), a.end() - 1, b.begin())) break;
        Itemset c = a;
        c.push_back(b.back());
        // Prune step: all (k-1)-subsets must be frequent.
        bool ok = true;
        for (std::size_t drop = 0; ok && drop < k; ++drop) {
          Itemset sub;
          for (std::size_t p = 0; p < k; ++p)
            if (p != drop) sub.push_back(c[p]);
          ok = out.support_of(sub).has_value();
        }
        if (ok) candidates.push_back(std::move(c));
      }
    }
    if (candidates.empty()) break;
    note_candidates(candidates.size(), k);

    // Counting scan.
    std::vector<std::size_t> counts(candidates.size(), 0);
    ++local.database_scans;
    for (const auto& tx : t.transactions) {
      if (tx.size() < k) continue;
      for (std::size_t c = 0; c < candidates.size(); ++c)
        if (is_subset(candidates[c], tx)) ++counts[c];
    }

    previous.clear();
    for (std::size_t c = 0; c < candidates.size(); ++c)
      if (counts[c] >= min_count) previous.push_back({std::move(candidates[c]), counts[c]});
  }
  if (stats) *stats = local;
  return out;
}

FrequentItemsets brute_force_mine(const TransactionSet& t, std::size_t min_count) {
  if (t.n_items > kBruteForceMaxItems)
    throw OracleError(OracleError::Kind::TooManyItems,
                      fmt::format("{} items exceeds the brute-force limit of {}", t.n_items,
                                  kBruteForceMaxItems));
  check_input(t, min_count);

  std::vector<std::uint32_t> masks;
  masks.reserve(t.transactions.size());
  for (const auto& tx : t.transactions) {
    std::uint32_t m = 0;
    for (ItemIndex i : tx) m |= 1U << i;
    masks.push_back(m);
  }

  std::map<std::size_t, std::vector<CountedItemset>> by_size;
  const std::uint32_t limit = 1U << t.n_items;
  for (std::uint32_t set = 1; set < limit; ++set) {
    std::size_t support = 0;
    for (std::uint32_t m : masks)
      if ((m & set) == set) ++support;
    if (support < min_count) continue;
    Itemset items;
    for (std::size_t i = 0; i < t.n_items; ++i)
      if (set & (1U << i)) items.push_back(static_cast<ItemIndex>(i));
    by_size[items.size()].push_back({std::move(items), support});
  }

  FrequentItemsets out(t.item_ids, t.transactions.size(), min_count);
  for (auto& [size, sets] : by_size) out.add_level(std::move(sets));
  return out;
}

}  // namespace bitarm
