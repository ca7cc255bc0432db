// bitarm: association rules from similarity matrices.
//
//   bitarm mine matrix.csv [--min-support 0.05] [--min-confidence 0.5] ...
//   bitarm measures matrix.csv --rules rules.tsv
//   bitarm measures --counts 5,4,4,3
//   bitarm benchmark [--input matrix.csv | --rows 5000 --items 50 --density 0.4]
//   bitarm synth --seed 1 --rows 10 --items 8 --density 0.3 -o out.csv
//
// Exit codes: 0 ok, 1 I/O, 2 validation/parse, 3 configuration, 4 internal.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "bitarm/pipeline.hpp"
#include "bitarm/report.hpp"
#include "bitarm/synth.hpp"

namespace {

using bitarm::ErrorCategory;

int exit_code(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::io: return 1;
    case ErrorCategory::validation: return 2;
    case ErrorCategory::config: return 3;
    case ErrorCategory::internal: return 4;
  }
  return 4;
}

std::string_view category_name(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::io: return "io";
    case ErrorCategory::validation: return "validation";
    case ErrorCategory::config: return "config";
    case ErrorCategory::internal: return "internal";
  }
  return "internal";
}

int report_error(ErrorCategory category, std::string_view code, std::string_view message) {
  nlohmann::ordered_json err;
  err["error"] = {{"code", code}, {"category", category_name(category)}, {"message", message}};
  std::cerr << err.dump() << '\n';
  return exit_code(category);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bitarm::IoError(fmt::format("cannot open '{}'", path));
  return in;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw bitarm::IoError("write to standard output failed");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw bitarm::IoError(fmt::format("cannot write '{}'", path));
}

// String-valued options are converted after parsing so that bad values map to
// ConfigError (exit 3) with the library's messages.
struct CommonOptions {
  std::string discretize = "max-minus-x:25";
  std::string measures = "all";
  std::string entropy_mode = "mean";
  std::string format = "tsv";
  std::size_t max_k = 0;
};

void add_common(CLI::App* cmd, bitarm::RunConfig& cfg, CommonOptions& opts) {
  cmd->add_option("--discretize", opts.discretize, "max-minus-x:<x> or beta:<b>")->capture_default_str();
  cmd->add_option("--min-support", cfg.min_support, "Relative minimum support in (0, 1]")
      ->capture_default_str();
  cmd->add_option("--min-confidence", cfg.min_conf, "Minimum confidence in (0, 1]")->capture_default_str();
  cmd->add_option("--top", cfg.top_n, "Number of ranked rules to report")->capture_default_str();
  cmd->add_option("--measures", opts.measures, "Comma-separated acronyms or 'all'")->capture_default_str();
  cmd->add_option("--entropy-mode", opts.entropy_mode, "mean or sum")->capture_default_str();
  cmd->add_option("--format", opts.format, "tsv or json")->capture_default_str();
  cmd->add_option("--max-k", opts.max_k, "Largest itemset size to mine (0 = unbounded)");
  cmd->add_option("--threads", cfg.threads, "Worker threads for support counting")->capture_default_str();
  cmd->add_flag("--strict-paper", cfg.strict_paper,
                "Count every k-combination of live columns instead of joining F(k-1)");
}

void finish_config(bitarm::RunConfig& cfg, const CommonOptions& opts) {
  cfg.discretize = bitarm::DiscretizeConfig::parse(opts.discretize);
  try {
    cfg.measures = bitarm::parse_measure_list(opts.measures);
  } catch (const bitarm::MeasureError& e) {
    throw bitarm::ConfigError(e.what());
  }
  if (opts.entropy_mode == "mean") {
    cfg.entropy_mode = bitarm::EntropyMode::mean;
  } else if (opts.entropy_mode == "sum") {
    cfg.entropy_mode = bitarm::EntropyMode::sum;
  } else {
    throw bitarm::ConfigError(fmt::format("entropy mode '{}' must be mean or sum", opts.entropy_mode));
  }
  if (opts.format == "tsv") {
    cfg.format = bitarm::OutputFormat::tsv;
  } else if (opts.format == "json") {
    cfg.format = bitarm::OutputFormat::json;
  } else {
    throw bitarm::ConfigError(fmt::format("format '{}' must be tsv or json", opts.format));
  }
  if (opts.max_k > 0) cfg.max_k = opts.max_k;
  cfg.validate();
}

void log_early_exit(const bitarm::MineReport& report) {
  std::cerr << fmt::format("paper-early-exit: {} of {} rules would be skipped\n",
                           report.early_exit_skipped.size(), report.rules_total);
  for (const auto& r : report.early_exit_skipped) {
    auto label = [&](const bitarm::Itemset& items) {
      std::string s;
      for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ";" : "") + report.item_ids[items[i]];
      return s;
    };
    std::cerr << fmt::format("  skipped\t{}\t{}\t{}\t{}\n", label(r.antecedent), label(r.consequent),
                             bitarm::format_number(r.support), bitarm::format_number(r.confidence));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Association rule mining over similarity matrices with Boolean-matrix pruning"};
  app.require_subcommand(1);

  bitarm::RunConfig cfg;
  CommonOptions opts;
  std::string output;
  std::string rules_path;
  std::string counts_text;
  bitarm::SynthConfig synth;
  synth.n_rows = 5000;
  synth.n_items = 50;
  synth.density = 0.4;

  auto* mine = app.add_subcommand("mine", "Discretize, mine, rank and score rules");
  mine->add_option("input", cfg.input_path, "Similarity matrix CSV")->required();
  mine->add_option("-o,--output", output, "Report path (default stdout)");
  mine->add_flag("--paper-early-exit", cfg.paper_early_exit,
                 "Log the rules the pseudocode's found<2 early exit would skip");
  add_common(mine, cfg, opts);

  auto* measures = app.add_subcommand("measures", "Score existing rules");
  measures->add_option("input", cfg.input_path, "Similarity matrix CSV");
  measures->add_option("--rules", rules_path, "Rules TSV: antecedent<TAB>consequent, items joined by ';'");
  measures->add_option("--counts", counts_text, "Score raw counts n,n_a,n_b,n_ab instead");
  measures->add_option("-o,--output", output, "Report path (default stdout)");
  add_common(measures, cfg, opts);

  auto* bench = app.add_subcommand("benchmark", "Compare the bit-matrix miner with Apriori");
  bench->add_option("--input", cfg.input_path, "Similarity matrix CSV (default: synthetic corpus)");
  bench->add_option("--rows", synth.n_rows, "Synthetic rows")->capture_default_str();
  bench->add_option("--items", synth.n_items, "Synthetic items")->capture_default_str();
  bench->add_option("--density", synth.density, "Synthetic density")->capture_default_str();
  bench->add_option("--seed", synth.seed, "Synthetic seed")->capture_default_str();
  bench->add_option("--repetitions", cfg.repetitions, "Timed runs per engine")->capture_default_str();
  bench->add_option("-o,--output", output, "Report path (default stdout)");
  add_common(bench, cfg, opts);

  auto* synth_cmd = app.add_subcommand("synth", "Write a reproducible synthetic similarity matrix");
  synth_cmd->add_option("--seed", synth.seed, "Generator seed")->capture_default_str();
  synth_cmd->add_option("--rows", synth.n_rows, "Probe rows")->required();
  synth_cmd->add_option("--items", synth.n_items, "Genes")->required();
  synth_cmd->add_option("--density", synth.density, "Fraction of high cells in (0, 1)")->required();
  synth_cmd->add_option("-o,--output", output, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error(ErrorCategory::config, e.get_name(), e.what());
  }

  try {
    if (*mine) {
      finish_config(cfg, opts);
      auto in = open_input(cfg.input_path);
      const auto report = bitarm::run_mine(in, cfg);
      if (cfg.paper_early_exit) log_early_exit(report);
      write_output(output, bitarm::format_report(report));
    } else if (*measures) {
      finish_config(cfg, opts);
      if (!counts_text.empty()) {
        bitarm::ContingencyCounts c;
        if (std::sscanf(counts_text.c_str(), "%zu,%zu,%zu,%zu", &c.n, &c.n_a, &c.n_b, &c.n_ab) != 4)
          throw bitarm::ConfigError(fmt::format("--counts '{}' must be n,n_a,n_b,n_ab", counts_text));
        const auto v = bitarm::measure_vector(c);
        if (cfg.format == bitarm::OutputFormat::json) {
          nlohmann::ordered_json doc;
          doc["counts"] = {{"n", c.n}, {"n_a", c.n_a}, {"n_b", c.n_b}, {"n_ab", c.n_ab}};
          nlohmann::ordered_json values = nlohmann::ordered_json::object();
          for (auto m : cfg.measures) {
            const double x = v[m];
            values[std::string(bitarm::measure_name(m))] =
                std::isinf(x) ? nlohmann::ordered_json(x > 0 ? "inf" : "-inf") : nlohmann::ordered_json(x);
          }
          doc["measures"] = values;
          write_output(output, doc.dump(2) + "\n");
          return 0;
        }
        std::string text;
        for (auto m : cfg.measures) text += fmt::format("{}\t", bitarm::measure_name(m));
        text.back() = '\n';
        for (auto m : cfg.measures) text += bitarm::format_number(v[m]) + '\t';
        text.back() = '\n';
        write_output(output, text);
      } else {
        if (cfg.input_path.empty() || rules_path.empty())
          throw bitarm::ConfigError("measures needs a matrix and --rules, or --counts");
        auto in = open_input(cfg.input_path);
        auto rules_in = open_input(rules_path);
        write_output(output, bitarm::format_report(bitarm::run_measures(in, rules_in, cfg)));
      }
    } else if (*bench) {
      finish_config(cfg, opts);
      bitarm::BenchmarkReport report;
      if (!cfg.input_path.empty()) {
        auto in = open_input(cfg.input_path);
        report = bitarm::run_benchmark(in, cfg.input_path, cfg);
      } else {
        std::istringstream in(bitarm::serialize_similarity_matrix(bitarm::synthesize(synth)));
        const auto corpus = fmt::format("synth(seed={},rows={},items={},density={})", synth.seed,
                                        synth.n_rows, synth.n_items, synth.density);
        report = bitarm::run_benchmark(in, corpus, cfg);
      }
      write_output(output, bitarm::format_benchmark(report, cfg.format));
    } else if (*synth_cmd) {
      write_output(output, bitarm::serialize_similarity_matrix(bitarm::synthesize(synth)));
    }
  } catch (const bitarm::Error& e) {
    return report_error(e.category(), e.code(), e.what());
  } catch (const std::exception& e) {
    return report_error(ErrorCategory::internal, "Unexpected", e.what());
  }
  return 0;
}
