#include "bitarm/rules.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace bitarm {

namespace {

AssociationRule make_rule(const FrequentItemsets& f, const CountedItemset& lhs,
                          const CountedItemset& whole) {
  AssociationRule r;
  r.antecedent = lhs.items;
  r.consequent = set_difference(whole.items, lhs.items);
  const auto n_b = f.support_of(r.consequent);
  if (!n_b)
    throw Error(ErrorCategory::internal, "NotDownwardClosed",
                fmt::format("consequent {{{}}} missing from the catalog", f.format(r.consequent)));
  r.counts = ContingencyCounts{f.n_transactions(), lhs.support, *n_b, whole.support};
  r.support = static_cast<double>(whole.support) / static_cast<double>(f.n_transactions());
  r.confidence = static_cast<double>(whole.support) / static_cast<double>(lhs.support);
  return r;
}

// Catalog order of the generating pair (f_k, f_m).
bool generation_less(const AssociationRule& a, const AssociationRule& b) {
  if (a.antecedent.size() != b.antecedent.size()) return a.antecedent.size() < b.antecedent.size();
  if (a.antecedent != b.antecedent) return a.antecedent < b.antecedent;
  const std::size_t ma = a.antecedent.size() + a.consequent.size();
  const std::size_t mb = b.antecedent.size() + b.consequent.size();
  if (ma != mb) return ma < mb;
  return set_union(a.antecedent, a.consequent) < set_union(b.antecedent, b.consequent);
}

bool same_rule(const AssociationRule& a, const AssociationRule& b) {
  return a.antecedent == b.antecedent && a.consequent == b.consequent;
}

}  // namespace

void RuleGenConfig::validate() const {
  if (!(min_conf > 0.0 && min_conf <= 1.0))
    throw ConfigError(fmt::format("min_conf {} outside (0, 1]", min_conf));
  if (top_n == 0) throw ConfigError("top_n must be at least 1");
}

bool meets_confidence(std::size_t n_ab, std::size_t n_a, double min_conf) noexcept {
  // rsup = support(f_k) * min_conf, with the slack scaled the same way.
  const auto a = static_cast<double>(n_a);
  return static_cast<double>(n_ab) >= a * min_conf - a * kConfidenceSlack;
}

std::vector<AssociationRule> generate_rules(const FrequentItemsets& f, const RuleGenConfig& cfg) {
  cfg.validate();
  std::vector<AssociationRule> rules;
  // Each f_m with m >= 2 yields one candidate per non-empty proper subset.
  for (std::size_t m = 2; m <= f.max_level(); ++m) {
    for (const auto& whole : f.level(m)) {
      const std::uint64_t full = (std::uint64_t{1} << m) - 1;
      Itemset lhs_items;
      for (std::uint64_t mask = 1; mask < full; ++mask) {
        lhs_items.clear();
        for (std::size_t i = 0; i < m; ++i)
          if (mask & (std::uint64_t{1} << i)) lhs_items.push_back(whole.items[i]);
        const auto lhs_support = f.support_of(lhs_items);
        if (!lhs_support)
          throw Error(ErrorCategory::internal, "NotDownwardClosed",
                      fmt::format("subset {{{}}} missing from the catalog", f.format(lhs_items)));
        if (!meets_confidence(whole.support, *lhs_support, cfg.min_conf)) continue;
        rules.push_back(make_rule(f, CountedItemset{lhs_items, *lhs_support}, whole));
      }
    }
  }
  std::sort(rules.begin(), rules.end(), generation_less);
  rules.erase(std::unique(rules.begin(), rules.end(), same_rule), rules.end());
  return rules;
}

PaperScanResult paper_rule_scan(const FrequentItemsets& f, const RuleGenConfig& cfg,
                                bool early_exit) {
  cfg.validate();
  PaperScanResult out;
  const auto catalog = f.all();  // level then lexicographic order
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const auto& fk = catalog[i];
    std::size_t found = 0;
    bool stopped = false;
    for (std::size_t j = i + 1; j < catalog.size(); ++j) {
      const auto& fm = catalog[j];
      if (fm.items.size() <= fk.items.size()) continue;
      if (meets_confidence(fm.support, fk.support, cfg.min_conf)) {
        if (is_subset(fk.items, fm.items)) {
          ++found;
          (stopped ? out.skipped : out.emitted).push_back(make_rule(f, fk, fm));
        }
      } else if (early_exit && !stopped) {
        if (found < 2) {
          stopped = true;
        } else {
          found = 0;
        }
      }
    }
  }
  std::sort(out.emitted.begin(), out.emitted.end(), generation_less);
  std::sort(out.skipped.begin(), out.skipped.end(), generation_less);
  return out;
}

std::vector<AssociationRule> rank_by_confidence(std::vector<AssociationRule> rules,
                                                std::size_t top_n) {
  std::sort(rules.begin(), rules.end(), [](const AssociationRule& a, const AssociationRule& b) {
    if (a.confidence != b.confidence) return a.confidence > b.confidence;
    if (a.support != b.support) return a.support > b.support;
    if (a.antecedent != b.antecedent) return a.antecedent < b.antecedent;
    return a.consequent < b.consequent;
  });
  if (rules.size() > top_n) rules.resize(top_n);
  return rules;
}

}  // namespace bitarm
