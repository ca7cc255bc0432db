#pragma once

#include <cstddef>
#include <vector>

#include "bitarm/error.hpp"
#include "bitarm/itemset.hpp"
#include "bitarm/measures.hpp"

namespace bitarm {

struct AssociationRule {
  Itemset antecedent;
  Itemset consequent;
  double support = 0.0;      // n_ab / n
  double confidence = 0.0;   // n_ab / n_a
  ContingencyCounts counts;

  friend bool operator==(const AssociationRule&, const AssociationRule&) = default;
};

struct RuleGenConfig {
  double min_conf = 0.5;
  std::size_t top_n = 15;

  void validate() const;  // throws ConfigError
};

// Absolute slack applied to confidence comparisons so that decimal thresholds
// (0.7 is stored as 0.69999...) admit rules whose exact confidence equals them.
inline constexpr double kConfidenceSlack = 1e-12;

// n_ab / n_a >= min_conf, evaluated in the multiplied-out form.
bool meets_confidence(std::size_t n_ab, std::size_t n_a, double min_conf) noexcept;

// Every rule f_k -> (f_m - f_k) for frequent f_k strictly contained in frequent
// f_m whose confidence reaches cfg.min_conf. Output order: by f_k (size, then
// lexicographic), then by f_m likewise. top_n is not applied here.
std::vector<AssociationRule> generate_rules(const FrequentItemsets& f, const RuleGenConfig& cfg);

// Replays the pairwise scan of the original pseudocode: for each f_k, walk
// every larger frequent f_m in catalog order with rsup = support(f_k) *
// min_conf. With early_exit the "found < 2" branch is applied under this
// reading: the first f_m below rsup ends the walk for f_k unless at least two
// rules were produced since the last reset, in which case the counter resets.
// `skipped` lists the rules complete enumeration has that the early exit lost.
// Diagnostic only; generate_rules never applies the early exit.
struct PaperScanResult {
  std::vector<AssociationRule> emitted;
  std::vector<AssociationRule> skipped;
};
PaperScanResult paper_rule_scan(const FrequentItemsets& f, const RuleGenConfig& cfg,
                                bool early_exit);

// Descending confidence, then descending support, then antecedent and
// consequent lexicographically. Truncated to top_n.
std::vector<AssociationRule> rank_by_confidence(std::vector<AssociationRule> rules,
                                                std::size_t top_n);

}  // namespace bitarm
