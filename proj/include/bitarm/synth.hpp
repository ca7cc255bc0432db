#pragma once

#include <cstddef>
#include <cstdint>

#include "bitarm/dataset.hpp"
#include "bitarm/error.hpp"

namespace bitarm {

class SynthError : public Error {
 public:
  enum class Kind { BadDensity, BadShape };

  SynthError(Kind kind, const std::string& message);
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

struct SynthConfig {
  std::uint64_t seed = 1;
  std::size_t n_rows = 100;
  std::size_t n_items = 10;
  double density = 0.3;   // probability of a "high" cell, in (0, 1)
};

// Reproducible similarity matrix. Generator, per cell in row-major order with
// a std::mt19937_64 seeded by cfg.seed:
//   u = (next() >> 11) * 2^-53; high iff u < density;
//   v = next() % 200001 micro-units, value = (800000 + v) / 1e6 when high,
//       v = next() % 600000, value = v / 1e6 otherwise.
// Every high cell lies in [0.8, 1.0] and every low cell in [0, 0.6), so the
// default max-minus-25% discretization maps high -> 1 and low -> 0 whenever at
// least one cell is high. Row ids are p1..pN, column ids g1..gM.
SimilarityMatrix synthesize(const SynthConfig& cfg);

}  // namespace bitarm
