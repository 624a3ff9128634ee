#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "unimod/measure.hpp"
#include "unimod/symbolic.hpp"

using namespace unimod;

namespace {

// independent density oracle in extended precision
long double log_density_oracle(const MeasureParams& mu, const UnipotentMatrix<double>& x, int N) {
  long double total = 0.0L;
  const long double pi = 3.14159265358979323846264338327950288L;
  for (int k = 1; k < N; ++k) {
    for (int n = k + 1; n <= N; ++n) {
      const long double b = mu.b(k, n);
      const long double v = x.entry(k, n);
      total += 0.5L * std::log(b / pi) - b * v * v;
    }
  }
  return total;
}

}  // namespace

TEST_CASE("weight families") {
  const auto geo = MeasureParams::geometric(2.0);
  CHECK(geo.b(1, 2) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(geo.b(2, 3) == doctest::Approx(64.0).epsilon(1e-15));
  CHECK(geo.log_b(2, 3) == doctest::Approx(6.0 * std::log(2.0)).epsilon(1e-15));
  // log form works far beyond double range of b itself
  CHECK(geo.log_b(40, 50) == doctest::Approx(2000.0 * std::log(2.0)).epsilon(1e-15));
  CHECK(geo.horizon() > 1000000);

  std::map<TriangularIndex, double> table = {{tri(1, 2), 4.0}, {tri(1, 3), 8.0}, {tri(2, 3), 64.0}};
  const auto exp_family = MeasureParams::explicit_matrix(table);
  CHECK(exp_family.b(1, 3) == doctest::Approx(8.0));
  CHECK(exp_family.horizon() == 3);
  CHECK_THROWS_AS(exp_family.b(1, 4), std::out_of_range);

  const auto custom = MeasureParams::custom([](int k, int n) { return double(k + n); }, "k+n");
  CHECK(custom.b(2, 5) == doctest::Approx(7.0));
  const auto bad = MeasureParams::custom([](int, int) { return 0.0; }, "zero");
  CHECK_THROWS(bad.b(1, 2));
}

TEST_CASE("gaussian stream determinism and moments") {
  GaussianStream a(123), b(123), c(124);
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 1000; ++i) {
    const double va = a.next();
    if (va != b.next()) all_equal = false;
    if (va != c.next()) any_diff = true;
  }
  CHECK(all_equal);
  CHECK(any_diff);

  GaussianStream s(99);
  const int n = 200000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double v = s.next();
    sum += v;
    sumsq += v * v;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  CHECK(std::abs(mean) < 4.0 / std::sqrt(double(n)));
  CHECK(std::abs(var - 1.0) < 4.0 * std::sqrt(2.0 / n));
}

TEST_CASE("sampler variance tracks 1/(2 b)") {
  const auto mu = MeasureParams::geometric(2.0);
  const auto report = sampler_moments(mu, 4, 50000, 7);
  CHECK(report.nsamples == 50000);
  CHECK(report.entries.size() == 6);
  for (const auto& e : report.entries) {
    CHECK(e.expected_variance ==
          doctest::Approx(0.5 * std::exp(-mu.log_b(e.index.k, e.index.n))).epsilon(1e-12));
  }
  CHECK(report.max_variance_rel_err < 4.0 * std::sqrt(2.0 / 50000.0));
  CHECK(report.max_abs_mean < 5.0 / std::sqrt(50000.0));

  // same seed, same draw
  GaussianStream s1(55), s2(55);
  const auto x1 = sample(mu, 5, s1);
  const auto x2 = sample(mu, 5, s2);
  CHECK(x1 == x2);
  CHECK(x1 == sample(mu, 5, 55));
}

TEST_CASE("log density against the oracle") {
  const auto mu = MeasureParams::geometric(2.0);
  GaussianStream s(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = sample(mu, 5, s);
    const double got = log_density(mu, x, 5);
    const long double want = log_density_oracle(mu, x, 5);
    CHECK(got == doctest::Approx(double(want)).epsilon(1e-13));
  }
}

TEST_CASE("radon-nikodym cocycle identities") {
  const auto mu = MeasureParams::geometric(2.0);
  GaussianStream s(31);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = sample(mu, 4, s);
    const auto t = sample(mu, 4, s);
    const auto u = sample(mu, 4, s);

    // right cocycle: d mu(x t u)/d mu(x) factors through x t
    const double lhs = rn_right(mu, x, multiply(t, u));
    const double rhs = rn_right(mu, multiply(x, t), u) * rn_right(mu, x, t);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));

    // left cocycle: d mu((s u)^{-1} x)/d mu(x)
    const double llhs = rn_left(mu, x, multiply(t, u));
    const double lrhs = rn_left(mu, multiply(invert(t), x), u) * rn_left(mu, x, t);
    CHECK(llhs == doctest::Approx(lrhs).epsilon(1e-10));

    // identity translation changes nothing
    CHECK(rn_right(mu, x, UnipotentMatrix<double>(4)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rn_left(mu, x, UnipotentMatrix<double>(4)) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("modular function two routes") {
  const auto mu = MeasureParams::geometric(2.0);
  GaussianStream s(37);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = sample(mu, 4, s);
    const auto xi = invert(x);

    // density-ratio route
    const double direct = std::exp(log_density(mu, x, 4) - log_density(mu, xi, 4));
    CHECK(delta_value(mu, x, 4) == doctest::Approx(direct).epsilon(1e-10));

    // Delta(x) Delta(x^{-1}) = 1
    CHECK(delta_value(mu, x, 4) * delta_value(mu, xi, 4) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(log_delta_value(mu, x, 4) == doctest::Approx(-log_delta_value(mu, xi, 4)).epsilon(1e-10));
  }
}

TEST_CASE("log delta equals the weighted w polynomial") {
  const auto mu = MeasureParams::geometric(2.0);
  const Polynomial L = ln_delta_poly(4);
  GaussianStream s(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = sample(mu, 4, s);
    const double poly_value = L.eval([&](const Variable& v) {
      const auto idx = v.index();
      if (v.kind() == Variable::Kind::Weight) return mu.b(idx.k, idx.n);
      return x.entry(idx.k, idx.n);
    });
    CHECK(log_delta_value(mu, x, 4) == doctest::Approx(-poly_value).epsilon(1e-11));
  }
}

TEST_CASE("size 2 modular function is trivial") {
  const auto mu = MeasureParams::geometric(2.0);
  GaussianStream s(43);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = sample(mu, 2, s);
    CHECK(log_delta_value(mu, x, 2) == 0.0);
    CHECK(delta_value(mu, x, 2) == 1.0);
  }
}
