#include "bitarm/synth.hpp"

#include <random>

#include <fmt/format.h>

namespace bitarm {

namespace {

std::string_view kind_name(SynthError::Kind kind) {
  return kind == SynthError::Kind::BadDensity ? "BadDensity" : "BadShape";
}

}  // namespace

SynthError::SynthError(Kind kind, const std::string& message)
    : Error(ErrorCategory::config, std::string(kind_name(kind)), message), kind_(kind) {}

SimilarityMatrix synthesize(const SynthConfig& cfg) {
  if (!(cfg.density > 0.0 && cfg.density < 1.0))
    throw SynthError(SynthError::Kind::BadDensity,
                     fmt::format("density {} outside (0, 1)", cfg.density));
  if (cfg.n_rows == 0 || cfg.n_items == 0)
    throw SynthError(SynthError::Kind::BadShape,
                     fmt::format("cannot synthesize a {}x{} matrix", cfg.n_rows, cfg.n_items));

  // Raw engine output only; std distributions are not portable bit-for-bit.
  std::mt19937_64 rng(cfg.seed);
  std::vector<double> values;
  values.reserve(cfg.n_rows * cfg.n_items);
  for (std::size_t i = 0; i < cfg.n_rows * cfg.n_items; ++i) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < cfg.density) {
      values.push_back(static_cast<double>(800000 + rng() % 200001) / 1e6);
    } else {
      values.push_back(static_cast<double>(rng() % 600000) / 1e6);
    }
  }

  std::vector<std::string> rows;
  std::vector<std::string> cols;
  for (std::size_t r = 1; r <= cfg.n_rows; ++r) rows.push_back(fmt::format("p{}", r));
  for (std::size_t c = 1; c <= cfg.n_items; ++c) cols.push_back(fmt::format("g{}", c));
  return SimilarityMatrix(std::move(rows), std::move(cols), std::move(values));
}

}  // namespace bitarm
