#include "bitarm/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>

#include <fmt/format.h>

#include "bitarm/scan_counter.hpp"

namespace bitarm {

namespace {

struct LoadedInput {
  SimilarityMatrix matrix;
  std::size_t passes;
};

LoadedInput load(std::istream& in) {
  ScanCountingBuf counter(in.rdbuf());
  std::istream counted(&counter);
  auto matrix = parse_similarity_matrix(counted);
  return {std::move(matrix), counter.passes()};
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

void fill_diversity(MineReport& report) {
  std::vector<double> supports;
  for (const auto& r : report.ranked) supports.push_back(r.rule.support);
  double total = 0.0;
  for (double s : supports) total += s;
  if (!supports.empty() && total > 0.0) report.entropy = entropy(supports, report.config.entropy_mode);
  if (supports.size() >= 2) report.variance = variance(supports);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

void RunConfig::validate() const {
  discretize.validate();
  if (!(min_support > 0.0 && min_support <= 1.0))
    throw ConfigError(fmt::format("min_support {} outside (0, 1]", min_support));
  rule_gen().validate();
  if (measures.empty()) throw ConfigError("no measures selected");
  if (repetitions == 0) throw ConfigError("repetitions must be at least 1");
  if (threads == 0) throw ConfigError("threads must be at least 1");
  if (max_k && *max_k == 0) throw ConfigError("max_k must be at least 1");
}

MiningConfig RunConfig::mining() const {
  return MiningConfig{.min_support = min_support, .max_k = max_k, .strict_paper = strict_paper,
                      .threads = threads};
}

RuleGenConfig RunConfig::rule_gen() const { return RuleGenConfig{.min_conf = min_conf, .top_n = top_n}; }

MineReport run_mine(std::istream& in, const RunConfig& cfg) {
  cfg.validate();
  auto [matrix, passes] = load(in);
  const BitMatrix b = discretize(matrix, cfg.discretize);
  const FrequentItemsets f = mine(b, cfg.mining());

  MineReport report;
  report.config = cfg;
  report.source_passes = passes;
  report.item_ids = b.col_ids();
  report.n_transactions = b.n_rows();
  report.n_items = b.n_cols();
  report.min_count = f.min_count();
  report.frequent_itemsets = f.size();

  auto rules = generate_rules(f, cfg.rule_gen());
  report.rules_total = rules.size();
  if (cfg.paper_early_exit) report.early_exit_skipped = paper_rule_scan(f, cfg.rule_gen(), true).skipped;

  for (auto& rule : rank_by_confidence(std::move(rules), cfg.top_n)) {
    const auto counts = contingency(rule.antecedent, rule.consequent, b);
    if (counts != rule.counts)
      throw Error(ErrorCategory::internal, "CountMismatch",
                  "catalog counts disagree with the matrix for a generated rule");
    report.ranked.push_back({rule, measure_vector(counts)});
  }
  fill_diversity(report);
  return report;
}

MineReport run_measures(std::istream& matrix_in, std::istream& rules_in, const RunConfig& cfg) {
  cfg.validate();
  auto [matrix, passes] = load(matrix_in);
  const BitMatrix b = discretize(matrix, cfg.discretize);

  std::unordered_map<std::string_view, ItemIndex> index;
  for (std::size_t c = 0; c < b.n_cols(); ++c) index.emplace(b.col_ids()[c], static_cast<ItemIndex>(c));
  auto parse_side = [&](std::string_view cell, std::size_t line_no) {
    Itemset items;
    for (auto name : split(cell, ';')) {
      auto it = index.find(name);
      if (it == index.end())
        throw MeasureError(MeasureError::Kind::UnknownItem,
                           fmt::format("rules line {}: unknown item '{}'", line_no, name));
      items.push_back(it->second);
    }
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    return items;
  };

  MineReport report;
  report.config = cfg;
  report.source_passes = passes;
  report.item_ids = b.col_ids();
  report.n_transactions = b.n_rows();
  report.n_items = b.n_cols();

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(rules_in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.starts_with('#') || line.starts_with("antecedent")) continue;
    const auto cells = split(line, '\t');
    if (cells.size() < 2)
      throw DatasetError(DatasetError::Kind::ParseError,
                         fmt::format("rules line {}: expected antecedent<TAB>consequent", line_no));
    AssociationRule rule;
    rule.antecedent = parse_side(cells[0], line_no);
    rule.consequent = parse_side(cells[1], line_no);
    rule.counts = contingency(rule.antecedent, rule.consequent, b);
    if (rule.counts.n_a == 0)
      throw MeasureError(MeasureError::Kind::InvalidCounts,
                         fmt::format("rules line {}: antecedent never occurs", line_no));
    rule.support = rule.counts.p_ab();
    rule.confidence = static_cast<double>(rule.counts.n_ab) / static_cast<double>(rule.counts.n_a);
    report.ranked.push_back({rule, measure_vector(rule.counts)});
  }
  if (rules_in.bad()) throw IoError("read error on rules file");
  report.rules_total = report.ranked.size();
  fill_diversity(report);
  return report;
}

BenchmarkReport run_benchmark(std::istream& in, const std::string& corpus, const RunConfig& cfg) {
  cfg.validate();
  auto [matrix, passes] = load(in);
  const BitMatrix b = discretize(matrix, cfg.discretize);
  const MiningConfig mcfg = cfg.mining();

  BenchmarkReport report;
  report.corpus = corpus;
  report.n_rows = b.n_rows();
  report.n_items = b.n_cols();
  report.min_support = cfg.min_support;
  report.miner.name = "bitmatrix";
  report.apriori.name = "apriori";

  FrequentItemsets mined;
  MiningStats mstats;
  for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
    const auto start = std::chrono::steady_clock::now();
    mined = mine(b, mcfg, &mstats);
    report.miner.seconds.push_back(seconds_since(start));
  }

  const TransactionSet transactions = TransactionSet::from_bitmatrix(b);
  FrequentItemsets baseline;
  AprioriStats astats;
  for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
    const auto start = std::chrono::steady_clock::now();
    baseline = apriori_mine(transactions, mstats.min_count, &astats);
    report.apriori.seconds.push_back(seconds_since(start));
  }

  report.min_count = mstats.min_count;
  report.frequent_itemsets = mined.size();
  report.max_level = mined.max_level();
  report.outputs_equal = mined == baseline;

  report.miner.total_candidates = mstats.total_candidates;
  report.miner.peak_resident_candidates = mstats.peak_resident_candidates;
  report.miner.peak_candidate_bytes = mstats.peak_candidate_bytes;
  report.miner.data_scans = passes;
  report.apriori.total_candidates = astats.total_candidates;
  report.apriori.peak_resident_candidates = astats.peak_resident_candidates;
  report.apriori.peak_candidate_bytes = astats.peak_candidate_bytes;
  report.apriori.data_scans = astats.database_scans;
  for (auto* t : {&report.miner, &report.apriori})
    t->best_seconds = *std::min_element(t->seconds.begin(), t->seconds.end());

  if (!report.outputs_equal)
    throw BenchmarkError(fmt::format("bit-matrix miner found {} itemsets, Apriori found {}",
                                     mined.size(), baseline.size()));
  if (passes != 1)
    throw BenchmarkError(fmt::format("input was scanned {} times", passes));
  return report;
}

}  // namespace bitarm
