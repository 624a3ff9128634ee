#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "unimod/series.hpp"

using namespace unimod;

TEST_CASE("compensated summation") {
  KahanAccumulator acc;
  acc.add(1.0);
  acc.add(1e16);
  acc.add(-1e16);
  CHECK(acc.value() == 1.0);

  KahanAccumulator tiny;
  for (int i = 0; i < 10000000; ++i) tiny.add(1e-10);
  CHECK(tiny.value() == doctest::Approx(1e-3).epsilon(1e-12));
}

TEST_CASE("S^L for the geometric family, frozen values") {
  const auto mu = MeasureParams::geometric(2.0);
  SeriesOptions opts;
  opts.max_terms = 50;

  const auto v12 = series_SL(mu, 1, 2, opts);
  CHECK(v12.verdict == Verdict::Converges);
  REQUIRE(v12.limit.has_value());
  // sum_{m>2} 2^m / 2^{2m} = sum 2^{-m} = 1/4
  CHECK(*v12.limit == doctest::Approx(0.25).epsilon(1e-15));
  REQUIRE(v12.partial_sums.size() == 50);
  CHECK(std::abs(v12.partial_sums.back() - 0.25) < 1e-12);
  REQUIRE(v12.tail_bound.has_value());
  CHECK(*v12.tail_bound < 1e-12);

  // q = s^{k-n}: limit q^{n+1}/(1-q)
  const auto v13 = series_SL(mu, 1, 3, opts);
  CHECK(*v13.limit == doctest::Approx(std::pow(0.25, 4) / 0.75).epsilon(1e-14));
  CHECK(*v13.limit == doctest::Approx(1.0 / 192.0).epsilon(1e-14));
  const auto v23 = series_SL(mu, 2, 3, opts);
  CHECK(*v23.limit == doctest::Approx(0.125).epsilon(1e-14));
}

TEST_CASE("S^L divergence routes") {
  // constant weights: every term is 1
  const auto flat = MeasureParams::custom([](int, int) { return 1.0; }, "constant:1");
  const auto v = series_SL(flat, 1, 2, {});
  CHECK(v.verdict == Verdict::Diverges);

  // growing terms cross the threshold and record a witness
  const auto grow =
      MeasureParams::custom([](int k, int n) { return std::pow(2.0, -double(k) * n * n); }, "2^-kn^2");
  SeriesOptions opts;
  opts.threshold = 1e6;
  const auto w = series_SL(grow, 1, 2, opts);
  // b_1m / b_2m = 2^{m^2}: diverges fast
  CHECK(w.verdict == Verdict::Diverges);
  REQUIRE(w.witness_index.has_value());
  CHECK(*w.witness_index == 5);

  // explicit tables end at the horizon: no verdict beyond it
  const auto table = MeasureParams::explicit_matrix(
      {{tri(1, 2), 1.0}, {tri(1, 3), 1.0}, {tri(2, 3), 1.0}});
  const auto e = series_SL(table, 1, 2, {});
  CHECK(e.verdict == Verdict::Inconclusive);
}

TEST_CASE("E series, frozen window-3 value") {
  const auto mu = MeasureParams::geometric(2.0);
  const auto v = series_E(mu, 3, {});
  CHECK(v.verdict == Verdict::Converges);
  // S^L_12/b_12 + S^L_13/b_13 + S^L_23/b_23 = 1/16 + (1/192)/8 + (1/8)/64
  const double expected = 0.25 / 4.0 + (1.0 / 192.0) / 8.0 + 0.125 / 64.0;
  CHECK(v.estimate() == doctest::Approx(expected).epsilon(1e-14));
  REQUIRE(v.tail_bound.has_value());
}

TEST_CASE("E series stability under window doubling") {
  const auto mu = MeasureParams::geometric(2.0);
  const auto v20 = series_E(mu, 20, {});
  const auto v40 = series_E(mu, 40, {});
  CHECK(v20.verdict == Verdict::Converges);
  CHECK(v40.verdict == Verdict::Converges);
  CHECK(*v40.tail_bound < 1e-10);
  CHECK(std::abs(v40.estimate() - v20.estimate()) < 1e-10);
  // tail bound dominates the actual movement
  CHECK(std::abs(v40.estimate() - v20.estimate()) <= *v20.tail_bound);
}

TEST_CASE("E diverges when any S^L does") {
  const auto flat = MeasureParams::custom([](int, int) { return 1.0; }, "constant:1");
  const auto v = series_E(flat, 5, {});
  CHECK(v.verdict == Verdict::Diverges);
  CHECK_FALSE(v.flags.empty());
}

TEST_CASE("S^{R,L} frozen partial sums at s = 2") {
  const auto mu = MeasureParams::geometric(2.0);
  const auto v = series_SRL(mu, 1, 2, {});
  CHECK(v.verdict == Verdict::Diverges);
  REQUIRE(v.partial_sums.size() >= 4);
  // terms b_1m / S^L_2m for m = 3, 4, 5, 6
  CHECK(v.partial_sums[0] == doctest::Approx(64.0).epsilon(1e-12));
  CHECK(v.partial_sums[1] == doctest::Approx(12352.0).epsilon(1e-12));
  CHECK(v.partial_sums[2] == doctest::Approx(7352384.0).epsilon(1e-12));
  CHECK(v.partial_sums[3] == doctest::Approx(16113479744.0).epsilon(1e-12));
  REQUIRE(v.witness_index.has_value());
  CHECK(*v.witness_index == 6);
}

TEST_CASE("classification regimes") {
  SUBCASE("geometric s = 2 lands in the modular regime") {
    const auto report = classify(MeasureParams::geometric(2.0), 6, {});
    CHECK(report.regime == "type III_1 factor regime");
    CHECK(report.SL.size() == 15);
    CHECK(report.SRL.size() == 15);
    for (const auto& [idx, v] : report.SL) {
      INFO("SL(", idx.k, ",", idx.n, ")");
      CHECK(v.verdict == Verdict::Converges);
    }
    for (const auto& [idx, v] : report.SRL) {
      INFO("SRL(", idx.k, ",", idx.n, ")");
      CHECK(v.verdict == Verdict::Diverges);
    }
    CHECK(report.E.verdict == Verdict::Converges);
  }

  SUBCASE("constant weights land in the irreducible regime") {
    const auto flat = MeasureParams::custom([](int, int) { return 1.0; }, "constant:1");
    const auto report = classify(flat, 5, {});
    CHECK(report.regime == "type I_infinity regime (irreducible right regular representation)");
    for (const auto& [idx, v] : report.SL) {
      INFO("SL(", idx.k, ",", idx.n, ")");
      CHECK(v.verdict == Verdict::Diverges);
    }
  }

  SUBCASE("spliced weights are mixed") {
    const auto spliced = MeasureParams::custom(
        [](int k, int n) { return k == 2 ? std::pow(2.0, n) : 1.0; }, "spliced");
    const auto report = classify(spliced, 5, {});
    CHECK(report.regime == "mixed/inconclusive");
  }
}

TEST_CASE("verdict names") {
  CHECK(verdict_name(Verdict::Converges) == "converges");
  CHECK(verdict_name(Verdict::Diverges) == "diverges");
  CHECK(verdict_name(Verdict::Inconclusive) == "inconclusive");
}
