#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bitarm/bitmatrix.hpp"
#include "bitarm/error.hpp"
#include "bitarm/itemset.hpp"

namespace bitarm {

class MeasureError : public Error {
 public:
  enum class Kind { InvalidCounts, UnknownItem, UnknownMeasure, ZeroTotal, TooFewValues,
                    OutOfRange };

  MeasureError(Kind kind, const std::string& message);
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// Sufficient statistics for every per-rule measure.
struct ContingencyCounts {
  std::size_t n = 0;     // transactions
  std::size_t n_a = 0;   // antecedent
  std::size_t n_b = 0;   // consequent
  std::size_t n_ab = 0;  // both

  std::size_t n_a_notb() const noexcept { return n_a - n_ab; }
  double p_a() const noexcept { return ratio(n_a); }
  double p_b() const noexcept { return ratio(n_b); }
  double p_ab() const noexcept { return ratio(n_ab); }
  double p_notb() const noexcept { return 1.0 - p_b(); }
  double p_a_notb() const noexcept { return ratio(n_a_notb()); }

  // n >= 1, n_a >= 1, n_ab <= min(n_a, n_b), n_a, n_b <= n. Throws InvalidCounts.
  void validate() const;

  friend bool operator==(const ContingencyCounts&, const ContingencyCounts&) = default;

 private:
  double ratio(std::size_t c) const noexcept {
    return static_cast<double>(c) / static_cast<double>(n);
  }
};

// Counts over the unpruned matrix b (n = b.n_rows()). Throws UnknownItem for
// out-of-range items and InvalidCounts if b has pruned rows.
ContingencyCounts contingency(std::span<const ItemIndex> antecedent,
                              std::span<const ItemIndex> consequent, const BitMatrix& b);

enum class Measure { SUP, CONF, LIFT, GAN, PS, LOE, ZHANG, IMPIND, LC, CONV, IMPINT, SEB, BF };
inline constexpr std::size_t kMeasureCount = 13;

inline constexpr std::array<Measure, kMeasureCount> kAllMeasures = {
    Measure::SUP,    Measure::CONF, Measure::LIFT, Measure::GAN,    Measure::PS,
    Measure::LOE,    Measure::ZHANG, Measure::IMPIND, Measure::LC, Measure::CONV,
    Measure::IMPINT, Measure::SEB,  Measure::BF};

std::string_view measure_name(Measure m) noexcept;
std::optional<Measure> parse_measure(std::string_view name);
// "all" or a comma-separated list of acronyms (case-insensitive). Throws
// UnknownMeasure.
std::vector<Measure> parse_measure_list(std::string_view list);

class MeasureVector {
 public:
  double operator[](Measure m) const noexcept { return values_[static_cast<std::size_t>(m)]; }
  double& operator[](Measure m) noexcept { return values_[static_cast<std::size_t>(m)]; }

 private:
  std::array<double, kMeasureCount> values_{};
};

// All thirteen measures. A vanishing denominator yields +inf/-inf following
// the numerator's sign, or the measure's independence value when the numerator
// vanishes too.
MeasureVector measure_vector(const ContingencyCounts& c);

// P[Poisson(lambda) >= k], evaluated by log-space pmf summation.
double poisson_upper_tail(double lambda, std::size_t k);

enum class EntropyMode { sum, mean };

std::string_view entropy_mode_name(EntropyMode mode) noexcept;

// Shannon entropy (bits) of values normalised to sum 1. Mean mode divides by
// the number of values. Throws ZeroTotal / OutOfRange / TooFewValues (empty).
double entropy(std::span<const double> values, EntropyMode mode = EntropyMode::mean);

// Sample variance (n - 1 denominator) of the raw values. Throws TooFewValues
// when fewer than two values.
double variance(std::span<const double> values);

}  // namespace bitarm
