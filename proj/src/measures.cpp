#include "bitarm/measures.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <limits>

#include <fmt/format.h>

namespace bitarm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string_view kind_name(MeasureError::Kind kind) {
  switch (kind) {
    case MeasureError::Kind::InvalidCounts: return "InvalidCounts";
    case MeasureError::Kind::UnknownItem: return "UnknownItem";
    case MeasureError::Kind::UnknownMeasure: return "UnknownMeasure";
    case MeasureError::Kind::ZeroTotal: return "ZeroTotal";
    case MeasureError::Kind::TooFewValues: return "TooFewValues";
    case MeasureError::Kind::OutOfRange: return "OutOfRange";
  }
  return "MeasureError";
}

ErrorCategory kind_category(MeasureError::Kind kind) {
  return kind == MeasureError::Kind::UnknownMeasure ? ErrorCategory::config
                                                    : ErrorCategory::validation;
}

// num / den with the conventions for a vanishing denominator: sign of the
// numerator picks the infinity, 0/0 gives the measure's independence value.
double ratio(double num, double den, double null_value) {
  if (den != 0.0) return num / den;
  if (num > 0.0) return kInf;
  if (num < 0.0) return -kInf;
  return null_value;
}

constexpr std::array<std::string_view, kMeasureCount> kNames = {
    "SUP", "CONF", "LIFT", "GAN", "PS", "LOE", "ZHANG", "IMPIND", "LC", "CONV", "IMPINT", "SEB", "BF"};

}  // namespace

MeasureError::MeasureError(Kind kind, const std::string& message)
    : Error(kind_category(kind), std::string(kind_name(kind)), message), kind_(kind) {}

void ContingencyCounts::validate() const {
  if (n == 0) throw MeasureError(MeasureError::Kind::InvalidCounts, "n must be >= 1");
  if (n_a == 0)
    throw MeasureError(MeasureError::Kind::InvalidCounts, "antecedent count n_a must be >= 1");
  if (n_a > n || n_b > n || n_ab > std::min(n_a, n_b))
    throw MeasureError(MeasureError::Kind::InvalidCounts,
                       fmt::format("inconsistent counts n={} n_a={} n_b={} n_ab={}", n, n_a, n_b, n_ab));
}

ContingencyCounts contingency(std::span<const ItemIndex> antecedent,
                              std::span<const ItemIndex> consequent, const BitMatrix& b) {
  for (auto side : {antecedent, consequent}) {
    if (side.empty())
      throw MeasureError(MeasureError::Kind::InvalidCounts, "rule sides must be non-empty");
    for (ItemIndex i : side)
      if (i >= b.n_cols())
        throw MeasureError(MeasureError::Kind::UnknownItem,
                           fmt::format("item {} not in a {}-column matrix", i, b.n_cols()));
  }
  if (b.live_row_count() != b.n_rows())
    throw MeasureError(MeasureError::Kind::InvalidCounts, "contingency needs the unpruned matrix");

  Itemset lhs(antecedent.begin(), antecedent.end());
  Itemset rhs(consequent.begin(), consequent.end());
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  lhs.erase(std::unique(lhs.begin(), lhs.end()), lhs.end());
  rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());
  const Itemset both = set_union(lhs, rhs);
  if (both.size() != lhs.size() + rhs.size())
    throw MeasureError(MeasureError::Kind::InvalidCounts, "antecedent and consequent overlap");

  ContingencyCounts c;
  c.n = b.n_rows();
  c.n_a = b.support_count(lhs);
  c.n_b = b.support_count(rhs);
  c.n_ab = b.support_count(both);
  return c;
}

std::string_view measure_name(Measure m) noexcept { return kNames[static_cast<std::size_t>(m)]; }

std::optional<Measure> parse_measure(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  for (Measure m : kAllMeasures)
    if (measure_name(m) == upper) return m;
  return std::nullopt;
}

std::vector<Measure> parse_measure_list(std::string_view list) {
  if (list == "all" || list == "ALL") return {kAllMeasures.begin(), kAllMeasures.end()};
  std::vector<Measure> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    auto comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    const auto token = list.substr(start, comma - start);
    const auto m = parse_measure(token);
    if (!m)
      throw MeasureError(MeasureError::Kind::UnknownMeasure, fmt::format("unknown measure '{}'", token));
    if (std::find(out.begin(), out.end(), *m) == out.end()) out.push_back(*m);
    start = comma + 1;
  }
  return out;
}

MeasureVector measure_vector(const ContingencyCounts& c) {
  c.validate();
  // Every measure is evaluated from the counts with the common factors of n
  // cancelled, so the independence case (n_ab * n == n_a * n_b) lands on its
  // null value exactly.
  const auto n = static_cast<double>(c.n);
  const auto a = static_cast<double>(c.n_a);
  const auto b = static_cast<double>(c.n_b);
  const auto ab = static_cast<double>(c.n_ab);
  const auto a_notb = static_cast<double>(c.n_a_notb());
  const auto notb = static_cast<double>(c.n - c.n_b);
  const auto dev = static_cast<double>(static_cast<std::int64_t>(c.n_ab * c.n) -
                                       static_cast<std::int64_t>(c.n_a * c.n_b));

  MeasureVector v;
  v[Measure::SUP] = ab / n;
  v[Measure::CONF] = ab / a;
  v[Measure::LIFT] = ratio(ab * n, a * b, 1.0);
  v[Measure::GAN] = 2.0 * v[Measure::CONF] - 1.0;
  v[Measure::PS] = dev / n;
  v[Measure::LOE] = ratio(dev, a * notb, 0.0);
  v[Measure::ZHANG] = ratio(dev, std::max(ab * notb, b * a_notb), 0.0);
  v[Measure::IMPIND] = ratio(-dev, std::sqrt(n) * std::sqrt(a * notb), 0.0);
  v[Measure::LC] = ratio(ab - a_notb, b, 0.0);
  v[Measure::CONV] = ratio(a * notb, n * a_notb, 1.0);
  v[Measure::IMPINT] = poisson_upper_tail(a * notb / n, c.n_a_notb());
  v[Measure::SEB] = ratio(ab, a_notb, 1.0);
  v[Measure::BF] = ratio(ab * notb, b * a_notb, 1.0);
  return v;
}

double poisson_upper_tail(double lambda, std::size_t k) {
  if (!(lambda >= 0.0) || std::isinf(lambda))
    throw MeasureError(MeasureError::Kind::OutOfRange, fmt::format("Poisson rate {} invalid", lambda));
  if (k == 0) return 1.0;
  if (lambda == 0.0) return 0.0;

  const double log_lambda = std::log(lambda);
  auto log_pmf = [&](double i) { return -lambda + i * log_lambda - std::lgamma(i + 1.0); };
  constexpr double kRelEps = 1e-17;

  const auto kd = static_cast<double>(k);
  if (kd > lambda) {
    // Upper tail directly; terms shrink from i = k on.
    double term = std::exp(log_pmf(kd));
    double sum = 0.0;
    for (double i = kd; term > kRelEps * sum || sum == 0.0; i += 1.0) {
      sum += term;
      term *= lambda / (i + 1.0);
      if (term == 0.0) break;
    }
    return std::min(sum, 1.0);
  }
  // Lower tail P[X <= k-1], summed downward from its largest term.
  double term = std::exp(log_pmf(kd - 1.0));
  double sum = 0.0;
  for (double i = kd - 1.0; i >= 0.0; i -= 1.0) {
    sum += term;
    term *= i / lambda;
    if (term <= kRelEps * sum) break;
  }
  return std::clamp(1.0 - sum, 0.0, 1.0);
}

std::string_view entropy_mode_name(EntropyMode mode) noexcept {
  return mode == EntropyMode::sum ? "sum" : "mean";
}

double entropy(std::span<const double> values, EntropyMode mode) {
  if (values.empty()) throw MeasureError(MeasureError::Kind::TooFewValues, "entropy of no values");
  double total = 0.0;
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0))
      throw MeasureError(MeasureError::Kind::OutOfRange, fmt::format("value {} outside [0, 1]", v));
    total += v;
  }
  if (total == 0.0) throw MeasureError(MeasureError::Kind::ZeroTotal, "values sum to zero");
  double h = 0.0;
  for (double v : values) {
    const double p = v / total;
    if (p > 0.0) h -= p * std::log2(p);
  }
  if (mode == EntropyMode::mean) h /= static_cast<double>(values.size());
  return h;
}

double variance(std::span<const double> values) {
  if (values.size() < 2)
    throw MeasureError(MeasureError::Kind::TooFewValues,
                       fmt::format("variance needs at least 2 values, got {}", values.size()));
  double mean = 0.0;
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0))
      throw MeasureError(MeasureError::Kind::OutOfRange, fmt::format("value {} outside [0, 1]", v));
    mean += v;
  }
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return ss / static_cast<double>(values.size() - 1);
}

}  // namespace bitarm
