#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "bitarm/dataset.hpp"
#include "bitarm/measures.hpp"
#include "bitarm/miner.hpp"
#include "bitarm/oracle.hpp"
#include "bitarm/rules.hpp"

namespace bitarm {

enum class OutputFormat { tsv, json };

struct RunConfig {
  std::string input_path;
  DiscretizeConfig discretize = DiscretizeConfig::max_minus(25.0);
  double min_support = 0.05;
  double min_conf = 0.5;
  std::size_t top_n = 15;
  std::vector<Measure> measures{kAllMeasures.begin(), kAllMeasures.end()};
  EntropyMode entropy_mode = EntropyMode::mean;
  OutputFormat format = OutputFormat::tsv;
  std::uint64_t seed = 1;
  std::size_t repetitions = 3;
  std::optional<std::size_t> max_k;
  bool strict_paper = false;
  bool paper_early_exit = false;
  unsigned threads = 1;

  void validate() const;  // throws ConfigError
  MiningConfig mining() const;
  RuleGenConfig rule_gen() const;
};

struct ScoredRule {
  AssociationRule rule;
  MeasureVector measures;
};

struct MineReport {
  RunConfig config;
  std::vector<std::string> item_ids;
  std::size_t n_transactions = 0;
  std::size_t n_items = 0;
  std::size_t min_count = 0;
  std::size_t frequent_itemsets = 0;
  std::size_t rules_total = 0;
  std::vector<ScoredRule> ranked;
  std::optional<double> entropy;
  std::optional<double> variance;
  // Filled only with config.paper_early_exit.
  std::vector<AssociationRule> early_exit_skipped;
  std::size_t source_passes = 0;
};

// parse -> discretize -> mine -> rules -> rank -> measures -> diversity. The
// stream is read once.
MineReport run_mine(std::istream& in, const RunConfig& cfg);

// Scores rules read from a rules file (first two tab-separated columns are
// antecedent and consequent, items joined by ';', '#' lines and a header line
// starting with "antecedent" ignored) against the discretized matrix. Rules
// keep their file order; ranking and top_n are not applied.
MineReport run_measures(std::istream& matrix_in, std::istream& rules_in, const RunConfig& cfg);

class BenchmarkError : public Error {
 public:
  explicit BenchmarkError(const std::string& message)
      : Error(ErrorCategory::internal, "OutputMismatch", message) {}
};

struct EngineTiming {
  std::string name;
  std::vector<double> seconds;  // one per repetition
  double best_seconds = 0.0;
  std::size_t total_candidates = 0;
  std::size_t peak_resident_candidates = 0;
  std::size_t peak_candidate_bytes = 0;
  std::size_t data_scans = 0;
};

struct BenchmarkReport {
  std::string corpus;   // description
  std::size_t n_rows = 0;
  std::size_t n_items = 0;
  double min_support = 0.0;
  std::size_t min_count = 0;
  std::size_t frequent_itemsets = 0;
  std::size_t max_level = 0;
  bool outputs_equal = false;
  EngineTiming miner;
  EngineTiming apriori;
};

// Runs the bit-matrix miner and Apriori on the same input and checks the
// outputs agree (throws BenchmarkError otherwise). The miner's data_scans is
// the number of passes over the source stream.
BenchmarkReport run_benchmark(std::istream& in, const std::string& corpus, const RunConfig& cfg);

}  // namespace bitarm
