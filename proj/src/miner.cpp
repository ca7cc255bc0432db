#include "bitarm/miner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include <fmt/format.h>

namespace bitarm {

namespace {

std::string_view kind_name(MiningError::Kind kind) {
  switch (kind) {
    case MiningError::Kind::EmptyInput: return "EmptyInput";
    case MiningError::Kind::InvalidConfig: return "InvalidConfig";
  }
  return "MiningError";
}

ErrorCategory kind_category(MiningError::Kind kind) {
  return kind == MiningError::Kind::InvalidConfig ? ErrorCategory::config
                                                  : ErrorCategory::validation;
}

// Result of counting one independent block of candidates.
struct BlockResult {
  std::vector<CountedItemset> frequent;
  std::size_t candidates = 0;
};

// Runs block(i) for i in [0, n_blocks) on up to `threads` workers. Each block
// writes only its own slot, so the merged output does not depend on
// scheduling.
template <typename Fn>
std::vector<BlockResult> run_blocks(std::size_t n_blocks, unsigned threads, Fn block) {
  std::vector<BlockResult> results(n_blocks);
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1U), n_blocks);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n_blocks; ++i) results[i] = block(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n_blocks; i = next++) results[i] = block(i);
    });
  }
  for (auto& t : pool) t.join();
  return results;
}

// Joins F(k-1) itemsets sharing their first k-2 items (the classic prefix
// join) and keeps a candidate only if every (k-1)-subset is in F(k-1). The
// AND of the shared k-1 columns is computed once and reused across the join
// partners. Only itemsets made entirely of live columns take part.
std::vector<BlockResult> count_joined(const BitMatrix& b, const FrequentItemsets& catalog,
                                      std::size_t k, std::size_t min_count, unsigned threads) {
  std::vector<const CountedItemset*> base;
  for (const auto& s : catalog.level(k - 1)) {
    if (std::all_of(s.items.begin(), s.items.end(),
                    [&](ItemIndex i) { return b.column_live(i); }))
      base.push_back(&s);
  }

  // Blocks are runs of base sharing the (k-2)-prefix.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < base.size();) {
    std::size_t j = i + 1;
    while (j < base.size() &&
           std::equal(base[i]->items.begin(), base[i]->items.end() - 1, base[j]->items.begin()))
      ++j;
    if (j - i >= 2) blocks.emplace_back(i, j);
    i = j;
  }

  return run_blocks(blocks.size(), threads, [&](std::size_t bi) {
    BlockResult out;
    const auto [first, last] = blocks[bi];
    Itemset candidate(k);
    Itemset subset(k - 1);
    for (std::size_t i = first; i < last; ++i) {
      const Itemset& left = base[i]->items;
      BitVector prefix = b.live_rows();
      for (ItemIndex c : left) prefix &= b.column(c);
      std::copy(left.begin(), left.end(), candidate.begin());
      for (std::size_t j = i + 1; j < last; ++j) {
        const ItemIndex tail = base[j]->items.back();
        candidate[k - 1] = tail;
        // Subsets dropping either of the last two items are left and base[j].
        bool closed = true;
        for (std::size_t drop = 0; closed && drop + 2 < k; ++drop) {
          std::size_t w = 0;
          for (std::size_t p = 0; p < k; ++p)
            if (p != drop) subset[w++] = candidate[p];
          closed = catalog.support_of(subset).has_value();
        }
        if (!closed) continue;
        ++out.candidates;
        const std::size_t support = and_count(prefix, b.column(tail));
        if (support >= min_count) out.frequent.push_back({candidate, support});
      }
    }
    return out;
  });
}

// Every k-combination of live columns, as written in the original
// pseudocode. Blocks are keyed by the first column of the combination.
std::vector<BlockResult> count_all_combinations(const BitMatrix& b, std::size_t k,
                                                std::size_t min_count, unsigned threads) {
  std::vector<ItemIndex> live;
  for (std::size_t c = 0; c < b.n_cols(); ++c)
    if (b.column_live(c)) live.push_back(static_cast<ItemIndex>(c));
  const std::size_t n_blocks = live.size() >= k ? live.size() - k + 1 : 0;

  return run_blocks(n_blocks, threads, [&](std::size_t head) {
    BlockResult out;
    Itemset combo(k);
    std::vector<BitVector> acc(k);  // acc[d] = live rows AND combo[0..d]
    std::vector<std::size_t> pos(k);
    pos[0] = head;
    combo[0] = live[head];
    acc[0] = b.live_rows() & b.column(live[head]);
    std::size_t depth = 1;
    pos[1] = head;
    while (depth > 0) {
      ++pos[depth];
      if (pos[depth] + (k - depth) > live.size()) {
        --depth;  // exhausted this depth
        continue;
      }
      combo[depth] = live[pos[depth]];
      if (depth + 1 == k) {
        ++out.candidates;
        const std::size_t support = and_count(acc[depth - 1], b.column(combo[depth]));
        if (support >= min_count) out.frequent.push_back({combo, support});
      } else {
        acc[depth] = acc[depth - 1] & b.column(combo[depth]);
        pos[depth + 1] = pos[depth];
        ++depth;
      }
    }
    return out;
  });
}

std::size_t prune_rows_below(BitMatrix& b, std::size_t min_items) {
  std::size_t pruned = 0;
  for (std::size_t r = 0; r < b.n_rows(); ++r) {
    if (b.row_live(r) && b.row_sum(r) < min_items) {
      b.prune_row(r);
      ++pruned;
    }
  }
  return pruned;
}

}  // namespace

MiningError::MiningError(Kind kind, const std::string& message)
    : Error(kind_category(kind), std::string(kind_name(kind)), message), kind_(kind) {}

void MiningConfig::validate() const {
  if (!(min_support > 0.0 && min_support <= 1.0))
    throw MiningError(MiningError::Kind::InvalidConfig,
                      fmt::format("min_support {} outside (0, 1]", min_support));
  if (max_k && *max_k == 0)
    throw MiningError(MiningError::Kind::InvalidConfig, "max_k must be at least 1");
}

std::size_t to_absolute_support(double min_support, std::size_t n_rows) {
  const double product = min_support * static_cast<double>(n_rows);
  const double nearest = std::round(product);
  const double count = std::abs(product - nearest) <= 1e-9 ? nearest : std::ceil(product);
  return std::max<std::size_t>(1, static_cast<std::size_t>(count));
}

FrequentItemsets mine(BitMatrix b, const MiningConfig& cfg, MiningStats* stats) {
  cfg.validate();
  if (b.n_rows() == 0 || b.n_cols() == 0)
    throw MiningError(MiningError::Kind::EmptyInput,
                      fmt::format("cannot mine a {}x{} matrix", b.n_rows(), b.n_cols()));

  const std::size_t min_count = to_absolute_support(cfg.min_support, b.n_rows());
  FrequentItemsets catalog(b.col_ids(), b.n_rows(), min_count);
  MiningStats local;
  local.min_count = min_count;

  // Level 1: column sums; infrequent columns are dropped for good.
  LevelTrace trace{.k = 1};
  std::vector<CountedItemset> level;
  for (std::size_t c = 0; c < b.n_cols(); ++c) {
    ++trace.candidates;
    const std::size_t support = b.column_sum(c);
    if (support >= min_count) {
      level.push_back({{static_cast<ItemIndex>(c)}, support});
    } else {
      b.prune_column(c);
      ++trace.columns_pruned;
    }
  }
  // A row with fewer than two live items supports no 2-itemset.
  trace.rows_pruned = prune_rows_below(b, 2);
  trace.frequent = level.size();
  trace.live_columns = b.live_column_count();
  trace.live_rows = b.live_row_count();
  local.levels.push_back(trace);
  local.total_candidates += trace.candidates;
  local.peak_resident_candidates = 1;
  local.peak_candidate_bytes = sizeof(ItemIndex) + sizeof(std::size_t);
  std::size_t previous_size = level.size();
  catalog.add_level(std::move(level));

  // A k-itemset needs k frequent (k-1)-subsets, so |F(k-1)| <= k-1 ends the
  // search.
  for (std::size_t k = 2; previous_size > k - 1; ++k) {
    if (cfg.max_k && k > *cfg.max_k) break;
    trace = LevelTrace{.k = k};

    auto blocks = cfg.strict_paper ? count_all_combinations(b, k, min_count, cfg.threads)
                                   : count_joined(b, catalog, k, min_count, cfg.threads);
    level.clear();
    for (auto& blk : blocks) {
      trace.candidates += blk.candidates;
      std::move(blk.frequent.begin(), blk.frequent.end(), std::back_inserter(level));
    }
    trace.frequent = level.size();

    // An item completing a (k+1)-itemset appears in k of its frequent
    // k-subsets; fewer occurrences means the column can go.
    std::vector<std::size_t> occurrences(b.n_cols(), 0);
    for (const auto& s : level)
      for (ItemIndex i : s.items) ++occurrences[i];
    for (std::size_t c = 0; c < b.n_cols(); ++c) {
      if (b.column_live(c) && occurrences[c] < k) {
        b.prune_column(c);
        ++trace.columns_pruned;
      }
    }
    // Rows with at most k live items hold no (k+1)-itemset.
    trace.rows_pruned = prune_rows_below(b, k + 1);
    trace.live_columns = b.live_column_count();
    trace.live_rows = b.live_row_count();

    if (trace.candidates > 0) {
      const std::size_t workers =
          std::min<std::size_t>(std::max(cfg.threads, 1U), std::max<std::size_t>(blocks.size(), 1));
      local.peak_resident_candidates = std::max(local.peak_resident_candidates, workers);
      const std::size_t per_worker = k * sizeof(ItemIndex) + sizeof(std::size_t) +
                                     (k - 1) * b.live_rows().words().size() * sizeof(BitVector::Word);
      local.peak_candidate_bytes = std::max(local.peak_candidate_bytes, workers * per_worker);
    }
    local.total_candidates += trace.candidates;
    local.levels.push_back(trace);

    previous_size = level.size();
    catalog.add_level(std::move(level));
  }

  if (stats) *stats = std::move(local);
  return catalog;
}

}  // namespace bitarm
