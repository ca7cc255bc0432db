#pragma once

#include <string>

#include "bitarm/pipeline.hpp"

namespace bitarm {

// Numbers use the shortest round-trip decimal form; infinities print as "inf"
// and "-inf" (JSON carries them as strings). Both formats carry the same
// fields.
std::string format_tsv(const MineReport& report);
std::string format_json(const MineReport& report);
std::string format_report(const MineReport& report);  // per report.config.format

// Timings are the only non-deterministic fields.
std::string format_benchmark(const BenchmarkReport& report, OutputFormat format);

std::string format_number(double v);

}  // namespace bitarm
