#include "bitarm/report.hpp"

#include <cmath>

#include <fmt/format.h>
#include <json.hpp>

namespace bitarm {

namespace {

using Json = nlohmann::ordered_json;

std::string join_ids(const MineReport& r, const Itemset& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ';';
    out += r.item_ids.at(items[i]);
  }
  return out;
}

std::string measure_list(const std::vector<Measure>& ms) {
  std::string out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) out += ',';
    out += measure_name(ms[i]);
  }
  return out;
}

Json json_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

Json json_optional(const std::optional<double>& v) {
  return v ? json_number(*v) : Json(nullptr);
}

std::string text_optional(const std::optional<double>& v) { return v ? format_number(*v) : "NA"; }

// Configuration header, shared by both formats in this order.
std::vector<std::pair<std::string, std::string>> config_fields(const MineReport& r) {
  const auto& c = r.config;
  return {
      {"input", c.input_path},
      {"discretize", c.discretize.to_string()},
      {"min_support", format_number(c.min_support)},
      {"min_confidence", format_number(c.min_conf)},
      {"top", std::to_string(c.top_n)},
      {"measures", measure_list(c.measures)},
      {"entropy_mode", std::string(entropy_mode_name(c.entropy_mode))},
      {"max_k", c.max_k ? std::to_string(*c.max_k) : "none"},
      {"strict_paper", c.strict_paper ? "true" : "false"},
  };
}

}  // namespace

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{}", v);
}

std::string format_tsv(const MineReport& r) {
  std::string out = "# bitarm report\n";
  for (const auto& [key, value] : config_fields(r)) out += fmt::format("# {}\t{}\n", key, value);
  out += fmt::format("# transactions\t{}\n# items\t{}\n# min_count\t{}\n# frequent_itemsets\t{}\n"
                     "# rules_total\t{}\n",
                     r.n_transactions, r.n_items, r.min_count, r.frequent_itemsets, r.rules_total);

  out += "antecedent\tconsequent\tsupport\tconfidence\tn\tn_a\tn_b\tn_ab";
  for (Measure m : r.config.measures) out += fmt::format("\t{}", measure_name(m));
  out += '\n';
  for (const auto& s : r.ranked) {
    const auto& rule = s.rule;
    out += fmt::format("{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}", join_ids(r, rule.antecedent),
                       join_ids(r, rule.consequent), format_number(rule.support),
                       format_number(rule.confidence), rule.counts.n, rule.counts.n_a, rule.counts.n_b,
                       rule.counts.n_ab);
    for (Measure m : r.config.measures) out += fmt::format("\t{}", format_number(s.measures[m]));
    out += '\n';
  }
  out += fmt::format("# entropy\t{}\n# variance\t{}\n", text_optional(r.entropy),
                     text_optional(r.variance));
  return out;
}

std::string format_json(const MineReport& r) {
  Json doc;
  Json config = Json::object();
  for (const auto& [key, value] : config_fields(r)) config[key] = value;
  doc["config"] = config;
  doc["summary"] = {{"transactions", r.n_transactions},
                    {"items", r.n_items},
                    {"min_count", r.min_count},
                    {"frequent_itemsets", r.frequent_itemsets},
                    {"rules_total", r.rules_total}};
  Json rules = Json::array();
  for (const auto& s : r.ranked) {
    const auto& rule = s.rule;
    Json entry;
    Json lhs = Json::array();
    Json rhs = Json::array();
    for (ItemIndex i : rule.antecedent) lhs.push_back(r.item_ids.at(i));
    for (ItemIndex i : rule.consequent) rhs.push_back(r.item_ids.at(i));
    entry["antecedent"] = lhs;
    entry["consequent"] = rhs;
    entry["support"] = json_number(rule.support);
    entry["confidence"] = json_number(rule.confidence);
    entry["counts"] = {{"n", rule.counts.n},
                       {"n_a", rule.counts.n_a},
                       {"n_b", rule.counts.n_b},
                       {"n_ab", rule.counts.n_ab}};
    Json measures = Json::object();
    for (Measure m : r.config.measures) measures[std::string(measure_name(m))] = json_number(s.measures[m]);
    entry["measures"] = measures;
    rules.push_back(entry);
  }
  doc["rules"] = rules;
  doc["diversity"] = {{"entropy", json_optional(r.entropy)}, {"variance", json_optional(r.variance)}};
  return doc.dump(2) + "\n";
}

std::string format_report(const MineReport& report) {
  return report.config.format == OutputFormat::json ? format_json(report) : format_tsv(report);
}

std::string format_benchmark(const BenchmarkReport& r, OutputFormat format) {
  const EngineTiming* engines[] = {&r.miner, &r.apriori};
  if (format == OutputFormat::json) {
    Json doc;
    doc["corpus"] = r.corpus;
    doc["rows"] = r.n_rows;
    doc["items"] = r.n_items;
    doc["min_support"] = r.min_support;
    doc["min_count"] = r.min_count;
    doc["frequent_itemsets"] = r.frequent_itemsets;
    doc["max_level"] = r.max_level;
    doc["outputs_equal"] = r.outputs_equal;
    Json list = Json::array();
    for (const auto* e : engines) {
      list.push_back({{"engine", e->name},
                      {"seconds", e->seconds},
                      {"best_seconds", e->best_seconds},
                      {"total_candidates", e->total_candidates},
                      {"peak_resident_candidates", e->peak_resident_candidates},
                      {"peak_candidate_bytes", e->peak_candidate_bytes},
                      {"data_scans", e->data_scans}});
    }
    doc["engines"] = list;
    return doc.dump(2) + "\n";
  }
  std::string out = "# bitarm benchmark\n";
  out += fmt::format("# corpus\t{}\n# rows\t{}\n# items\t{}\n# min_support\t{}\n# min_count\t{}\n"
                     "# frequent_itemsets\t{}\n# max_level\t{}\n# outputs_equal\t{}\n",
                     r.corpus, r.n_rows, r.n_items, format_number(r.min_support), r.min_count,
                     r.frequent_itemsets, r.max_level, r.outputs_equal ? "true" : "false");
  out += "engine\tbest_seconds\ttotal_candidates\tpeak_resident_candidates\tpeak_candidate_bytes\tdata_scans\n";
  for (const auto* e : engines) {
    out += fmt::format("{}\t{:.6f}\t{}\t{}\t{}\t{}\n", e->name, e->best_seconds, e->total_candidates,
                       e->peak_resident_candidates, e->peak_candidate_bytes, e->data_scans);
  }
  return out;
}

}  // namespace bitarm
