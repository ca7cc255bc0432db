#include <doctest.h>

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <random>

#include "bitarm/measures.hpp"
#include "test_support.hpp"

using namespace bitarm;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Supports of a reference top-15 rule list.
const std::vector<double> kReferenceSupports = {0.05, 0.06, 0.07, 0.05, 0.06, 0.07, 0.05, 0.06,
                                     0.07, 0.05, 0.07, 0.08, 0.08, 0.09, 0.09};

// The measures written directly in probability form, for comparison with the
// count-based implementation. Only called where no denominator vanishes.
std::array<double, kMeasureCount> probability_form(const ContingencyCounts& c) {
  const double n = static_cast<double>(c.n);
  const double pa = c.n_a / n, pb = c.n_b / n, pab = c.n_ab / n;
  const double pnotb = 1.0 - pb, panotb = (c.n_a - c.n_ab) / n;
  const double conf = pab / pa;
  const double lambda = n * pa * pnotb;
  return {pab,
          conf,
          pab / (pa * pb),
          2.0 * conf - 1.0,
          n * (pab - pa * pb),
          (conf - pb) / pnotb,
          (pab - pa * pb) / std::max(pab * pnotb, pb * panotb),
          std::sqrt(n) * (panotb - pa * pnotb) / std::sqrt(pa * pnotb),
          (pab - panotb) / pb,
          (pa * pnotb) / panotb,
          c.n_a == c.n_ab ? 1.0 : boost::math::gamma_p(static_cast<double>(c.n_a - c.n_ab), lambda),
          pab / panotb,
          (pab * pnotb) / (pb * panotb)};
}

MeasureError::Kind error_kind(auto fn) {
  try {
    fn();
  } catch (const MeasureError& e) {
    return e.kind();
  }
  FAIL("expected MeasureError");
  return MeasureError::Kind::InvalidCounts;
}

}  // namespace

TEST_CASE("hand-computed vector for (5, 4, 4, 3)") {
  const auto v = measure_vector({5, 4, 4, 3});
  CHECK(v[Measure::SUP] == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(v[Measure::CONF] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(v[Measure::LIFT] == doctest::Approx(0.9375).epsilon(1e-12));
  CHECK(v[Measure::GAN] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(v[Measure::PS] == doctest::Approx(-0.2).epsilon(1e-12));
  CHECK(v[Measure::LOE] == doctest::Approx(-0.25).epsilon(1e-12));
  CHECK(v[Measure::ZHANG] == doctest::Approx(-0.25).epsilon(1e-12));
  CHECK(v[Measure::IMPIND] == doctest::Approx(0.2236067977499790).epsilon(1e-12));
  CHECK(v[Measure::LC] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(v[Measure::CONV] == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(v[Measure::SEB] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(v[Measure::BF] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(v[Measure::IMPINT] == doctest::Approx(1.0 - std::exp(-0.8)).epsilon(1e-12));
}

TEST_CASE("independence gives the null values exactly") {
  const auto v = measure_vector({100, 50, 50, 25});
  CHECK(v[Measure::LIFT] == 1.0);
  CHECK(v[Measure::PS] == 0.0);
  CHECK(v[Measure::LOE] == 0.0);
  CHECK(v[Measure::ZHANG] == 0.0);
  CHECK(v[Measure::IMPIND] == 0.0);
  CHECK(v[Measure::CONV] == 1.0);
  CHECK(v[Measure::BF] == 1.0);
}

TEST_CASE("null invariance over random independent tables") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    // n = x*y, n_a = x*ya, n_b = xb*y, n_ab = xb*ya gives n_ab*n = n_a*n_b.
    const std::size_t x = 1 + rng() % 40, y = 1 + rng() % 40;
    const std::size_t ya = 1 + rng() % y, xb = 1 + rng() % x;
    if (xb == x) continue;  // keep P_b < 1
    const ContingencyCounts c{x * y, x * ya, xb * y, xb * ya};
    const auto v = measure_vector(c);
    CHECK(std::abs(v[Measure::LIFT] - 1.0) <= 1e-12);
    CHECK(std::abs(v[Measure::PS]) <= 1e-12);
    CHECK(std::abs(v[Measure::LOE]) <= 1e-12);
    CHECK(std::abs(v[Measure::ZHANG]) <= 1e-12);
    CHECK(std::abs(v[Measure::IMPIND]) <= 1e-12);
    CHECK(std::abs(v[Measure::CONV] - 1.0) <= 1e-12);
    CHECK(std::abs(v[Measure::BF] - 1.0) <= 1e-12);
  }
}

TEST_CASE("perfect rule") {
  const auto v = measure_vector({20, 6, 10, 6});
  CHECK(v[Measure::CONF] == 1.0);
  CHECK(v[Measure::IMPINT] == 1.0);
  CHECK(v[Measure::CONV] == kInf);
  CHECK(v[Measure::SEB] == kInf);
  CHECK(v[Measure::BF] == kInf);
}

TEST_CASE("degenerate marginals never produce NaN") {
  // P_b = 1 (consequent everywhere) and P_b = 0.
  for (const ContingencyCounts c : {ContingencyCounts{10, 4, 10, 4}, ContingencyCounts{10, 4, 0, 0},
                                    ContingencyCounts{1, 1, 1, 1}, ContingencyCounts{3, 3, 3, 3}}) {
    const auto v = measure_vector(c);
    for (Measure m : kAllMeasures) CHECK_FALSE(std::isnan(v[m]));
  }
  const auto all_b = measure_vector({10, 4, 10, 4});
  CHECK(all_b[Measure::LIFT] == 1.0);
  CHECK(all_b[Measure::LOE] == 0.0);
  CHECK(all_b[Measure::ZHANG] == 0.0);
  CHECK(all_b[Measure::IMPIND] == 0.0);
  CHECK(all_b[Measure::CONV] == 1.0);
  CHECK(all_b[Measure::BF] == 1.0);
  CHECK(all_b[Measure::SEB] == kInf);
  const auto no_b = measure_vector({10, 4, 0, 0});
  CHECK(no_b[Measure::LIFT] == 1.0);
  CHECK(no_b[Measure::LC] == -kInf);
  CHECK(no_b[Measure::ZHANG] == 0.0);
  CHECK(no_b[Measure::SEB] == 0.0);
  CHECK(no_b[Measure::BF] == 1.0);
}

TEST_CASE("counts form agrees with the probability form") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 2 + rng() % 300;
    const std::size_t n_a = 1 + rng() % n;
    const std::size_t n_b = 1 + rng() % (n - 1);  // 0 < P_b < 1
    const std::size_t lo = n_a + n_b > n ? n_a + n_b - n : 0;
    const std::size_t hi = std::min(n_a, n_b);
    const std::size_t n_ab = lo + rng() % (hi - lo + 1);
    if (n_ab == n_a) continue;  // P_a_notb = 0 handled by the infinity cases
    const ContingencyCounts c{n, n_a, n_b, n_ab};
    const auto v = measure_vector(c);
    const auto ref = probability_form(c);
    for (Measure m : kAllMeasures) {
      const double want = ref[static_cast<std::size_t>(m)];
      CHECK_MESSAGE(std::abs(v[m] - want) <= 1e-9 * std::max(1.0, std::abs(want)),
                    measure_name(m) << " for " << n << "," << n_a << "," << n_b << "," << n_ab);
    }
  }
}

TEST_CASE("monotone in n_ab with the margins fixed") {
  const std::size_t n = 60, n_a = 25, n_b = 30;
  auto prev = measure_vector({n, n_a, n_b, 0});
  for (std::size_t n_ab = 1; n_ab <= 25; ++n_ab) {
    const auto v = measure_vector({n, n_a, n_b, n_ab});
    for (Measure m : {Measure::SUP, Measure::CONF, Measure::LIFT, Measure::GAN, Measure::LOE,
                      Measure::LC, Measure::SEB, Measure::BF})
      CHECK_MESSAGE(v[m] >= prev[m], measure_name(m) << " at n_ab=" << n_ab);
    CHECK(v[Measure::IMPIND] <= prev[Measure::IMPIND]);
    prev = v;
  }
}

TEST_CASE("measure ranges") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 100;
    const std::size_t n_a = 1 + rng() % n;
    const std::size_t n_b = rng() % (n + 1);
    const std::size_t lo = n_a + n_b > n ? n_a + n_b - n : 0;
    const std::size_t n_ab = lo + rng() % (std::min(n_a, n_b) - lo + 1);
    const auto v = measure_vector({n, n_a, n_b, n_ab});
    for (Measure m : {Measure::SUP, Measure::CONF, Measure::IMPINT}) {
      CHECK(v[m] >= 0.0);
      CHECK(v[m] <= 1.0);
    }
    CHECK(v[Measure::GAN] >= -1.0);
    CHECK(v[Measure::GAN] <= 1.0);
    for (Measure m : {Measure::LIFT, Measure::CONV, Measure::SEB, Measure::BF}) CHECK(v[m] >= 0.0);
  }
}

TEST_CASE("invalid counts") {
  CHECK(error_kind([] { (void)measure_vector({0, 0, 0, 0}); }) == MeasureError::Kind::InvalidCounts);
  CHECK(error_kind([] { (void)measure_vector({5, 0, 3, 0}); }) == MeasureError::Kind::InvalidCounts);
  CHECK(error_kind([] { (void)measure_vector({5, 2, 3, 3}); }) == MeasureError::Kind::InvalidCounts);
  CHECK(error_kind([] { (void)measure_vector({5, 6, 3, 3}); }) == MeasureError::Kind::InvalidCounts);
}

TEST_CASE("poisson tail against the regularized incomplete gamma") {
  for (double lambda : {0.1, 1.0, 5.0, 20.0}) {
    CHECK(poisson_upper_tail(lambda, 0) == 1.0);
    for (std::size_t k = 1; k <= 40; ++k) {
      const double want = boost::math::gamma_p(static_cast<double>(k), lambda);
      CHECK_MESSAGE(std::abs(poisson_upper_tail(lambda, k) - want) <= 1e-12,
                    "lambda=" << lambda << " k=" << k);
    }
  }
  // Large rates stay exact to 1e-6 without a normal approximation.
  for (double lambda : {700.5, 1000.0, 25000.0}) {
    for (double offset : {-80.0, -10.0, 0.0, 10.0, 80.0}) {
      const auto k = static_cast<std::size_t>(lambda + offset * std::sqrt(lambda) / 10.0);
      const double want = boost::math::gamma_p(static_cast<double>(k), lambda);
      CHECK(std::abs(poisson_upper_tail(lambda, k) - want) <= 1e-6);
    }
  }
  CHECK(poisson_upper_tail(0.0, 3) == 0.0);
  CHECK_THROWS_AS(poisson_upper_tail(-1.0, 3), MeasureError);
}

TEST_CASE("entropy") {
  // -sum p log2 p = 3.8775314422316987 over the 15 supports.
  CHECK(entropy(kReferenceSupports, EntropyMode::sum) == doctest::Approx(3.8775314422316987).epsilon(1e-12));
  CHECK(entropy(kReferenceSupports, EntropyMode::mean) == doctest::Approx(0.2585020961487799).epsilon(1e-12));
  const std::vector<double> single = {0.37};
  CHECK(entropy(single) == 0.0);
  const std::vector<double> four = {0.2, 0.2, 0.2, 0.2};
  CHECK(entropy(four, EntropyMode::sum) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(entropy(four, EntropyMode::mean) == doctest::Approx(0.5).epsilon(1e-15));
  const std::vector<double> with_zero = {0.0, 0.5, 0.5};
  CHECK(entropy(with_zero, EntropyMode::sum) == doctest::Approx(1.0));

  const std::vector<double> zeros = {0.0, 0.0};
  CHECK(error_kind([&] { (void)entropy(zeros); }) == MeasureError::Kind::ZeroTotal);
  CHECK(error_kind([] { (void)entropy({}); }) == MeasureError::Kind::TooFewValues);
}

TEST_CASE("entropy of uniform distributions is log2(n) and maximal") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> noise(-0.04, 0.04);
  for (std::size_t n = 1; n <= 64; ++n) {
    const std::vector<double> uniform(n, 0.5);
    const double h = entropy(uniform, EntropyMode::sum);
    CHECK(std::abs(h - std::log2(static_cast<double>(n))) <= 1e-12);
    for (int trial = 0; trial < 20; ++trial) {
      auto perturbed = uniform;
      for (double& v : perturbed) v += noise(rng);
      CHECK(entropy(perturbed, EntropyMode::sum) <= h + 1e-12);
    }
  }
}

TEST_CASE("variance") {
  CHECK(variance(kReferenceSupports) == doctest::Approx(1.952380952380952e-4).epsilon(1e-12));
  const std::vector<double> same = {0.3, 0.3, 0.3};
  CHECK(variance(same) == 0.0);
  const std::vector<double> two = {0.0, 1.0};
  CHECK(variance(two) == 0.5);
  const std::vector<double> one = {0.5};
  CHECK(error_kind([&] { (void)variance(one); }) == MeasureError::Kind::TooFewValues);

  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> unit(0.0, 0.5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> v(2 + rng() % 20);
    for (double& x : v) x = unit(rng);
    const double base = variance(v);
    auto shuffled = v;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(variance(shuffled) == doctest::Approx(base).epsilon(1e-12));
    auto shifted = v;
    for (double& x : shifted) x += 0.4;
    CHECK(variance(shifted) == doctest::Approx(base).epsilon(1e-9));
  }
}

TEST_CASE("contingency from the matrix") {
  const auto b = testing::five_transactions();
  CHECK(contingency(Itemset{0}, Itemset{1}, b) == ContingencyCounts{5, 4, 4, 3});
  CHECK(contingency(Itemset{0, 1}, Itemset{2}, b) == ContingencyCounts{5, 3, 3, 1});

  const std::vector<std::string> disjoint = {"10", "01"};
  const auto d = BitMatrix::from_rows(disjoint);
  const auto c = contingency(Itemset{0}, Itemset{1}, d);
  CHECK(c.n_ab == 0);
  CHECK(c.p_ab() == 0.0);

  const std::vector<std::string> single = {"11"};
  const auto s = contingency(Itemset{0}, Itemset{1}, BitMatrix::from_rows(single));
  CHECK(s == ContingencyCounts{1, 1, 1, 1});
  CHECK(measure_vector(s)[Measure::CONF] == 1.0);

  CHECK(error_kind([&] { (void)contingency(Itemset{0}, Itemset{7}, b); }) ==
        MeasureError::Kind::UnknownItem);
  CHECK(error_kind([&] { (void)contingency(Itemset{0}, Itemset{0}, b); }) ==
        MeasureError::Kind::InvalidCounts);
  auto pruned = b;
  pruned.prune_row(0);
  CHECK(error_kind([&] { (void)contingency(Itemset{0}, Itemset{1}, pruned); }) ==
        MeasureError::Kind::InvalidCounts);
}

TEST_CASE("measure names") {
  CHECK(measure_name(Measure::IMPINT) == "IMPINT");
  CHECK(parse_measure("lift") == Measure::LIFT);
  CHECK_FALSE(parse_measure("kappa").has_value());
  CHECK(parse_measure_list("all").size() == kMeasureCount);
  CHECK(parse_measure_list("SUP,conf,SUP") == std::vector<Measure>{Measure::SUP, Measure::CONF});
  CHECK(error_kind([] { (void)parse_measure_list("SUP,,CONF"); }) == MeasureError::Kind::UnknownMeasure);
}
