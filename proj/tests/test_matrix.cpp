#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "unimod/matrix.hpp"
#include "unimod/symbolic.hpp"

using namespace unimod;
using namespace unimod::testutil;

TEST_CASE("entry semantics") {
  UnipotentMatrix<Rational> m(4);
  CHECK(m.entry(2, 2) == rat(1));
  CHECK(m.entry(3, 1) == rat(0));
  CHECK(m.entry(1, 4) == rat(0));
  m.set(1, 4, rat(5));
  CHECK(m.entry(1, 4) == rat(5));
  CHECK_THROWS_AS(m.entry(0, 1), std::out_of_range);
  CHECK_THROWS_AS(m.entry(1, 5), std::out_of_range);
  CHECK_THROWS_AS(m.set(2, 2, rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(m.set(3, 2, rat(1)), std::invalid_argument);

  // storing zero erases
  m.set(1, 4, rat(0));
  CHECK(m.stored_entries().empty());
}

TEST_CASE("identity and associativity") {
  std::mt19937_64 rng(3);
  const UnipotentMatrix<Rational> id(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_rational_matrix(rng, 5);
    const auto b = random_rational_matrix(rng, 5);
    const auto c = random_rational_matrix(rng, 5);
    CHECK(multiply(a, id) == a);
    CHECK(multiply(id, a) == a);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  }
}

TEST_CASE("elementary matrices") {
  const auto e12 = elementary<Rational>(3, 1, 2, rat(1));
  const auto e23 = elementary<Rational>(3, 2, 3, rat(1));
  const auto prod = multiply(e12, e23);
  // (E_12(a) E_23(b))_13 = a b
  CHECK(prod.entry(1, 3) == rat(1));
  CHECK(prod.entry(1, 2) == rat(1));
  CHECK(prod.entry(2, 3) == rat(1));
  // transposed order has no fill-in
  CHECK(multiply(e23, e12).entry(1, 3) == rat(0));
  // one-parameter subgroup: E(a) E(b) = E(a+b)
  const auto ea = elementary<Rational>(4, 2, 4, rat(2, 3));
  const auto eb = elementary<Rational>(4, 2, 4, rat(1, 3));
  CHECK(multiply(ea, eb) == elementary<Rational>(4, 2, 4, rat(1)));
}

TEST_CASE("inverse by back-substitution") {
  std::mt19937_64 rng(5);
  const UnipotentMatrix<Rational> id(6);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_rational_matrix(rng, 6);
    const auto xi = invert(x);
    CHECK(multiply(x, xi) == id);
    CHECK(multiply(xi, x) == id);
    CHECK(invert(xi) == x);
  }
}

TEST_CASE("inversion is an antihomomorphism") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_rational_matrix(rng, 5);
    const auto t = random_rational_matrix(rng, 5);
    CHECK(phi_inversion_identity_check(x, t));
    CHECK(invert(multiply(x, t)) == multiply(invert(t), invert(x)));
  }
}

TEST_CASE("symbolic N=3 inverse entries") {
  const auto x = symbolic_matrix(3);
  const auto xi = invert(x);
  const Polynomial x12 = coord(1, 2), x13 = coord(1, 3), x23 = coord(2, 3);
  CHECK(xi.entry(1, 2) == Polynomial(rat(-1)) * x12);
  CHECK(xi.entry(2, 3) == Polynomial(rat(-1)) * x23);
  CHECK(xi.entry(1, 3) == Polynomial(rat(-1)) * x13 + x12 * x23);
}

TEST_CASE("embedding preserves products") {
  std::mt19937_64 rng(13);
  const auto a = random_rational_matrix(rng, 3);
  const auto b = random_rational_matrix(rng, 3);
  const auto ea = embed(a, 5);
  const auto eb = embed(b, 5);
  CHECK(embed(multiply(a, b), 5) == multiply(ea, eb));
  CHECK(ea.entry(1, 3) == a.entry(1, 3));
  CHECK(ea.entry(1, 4) == rat(0));
  CHECK(ea.entry(4, 5) == rat(0));
  CHECK_THROWS_AS(embed(a, 2), std::invalid_argument);
}

TEST_CASE("double scalar matrices") {
  UnipotentMatrix<double> x(3);
  x.set(1, 2, 0.5);
  x.set(2, 3, -2.0);
  x.set(1, 3, 1.0);
  const auto xi = invert(x);
  CHECK(xi.entry(1, 2) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(xi.entry(2, 3) == doctest::Approx(2.0).epsilon(1e-15));
  // -x13 + x12 x23 = -1 + 0.5 * -2 = -2
  CHECK(xi.entry(1, 3) == doctest::Approx(-2.0).epsilon(1e-15));
  const auto prod = multiply(x, xi);
  CHECK(prod.entry(1, 3) == doctest::Approx(0.0));
}

TEST_CASE("map_entries changes scalar type") {
  std::mt19937_64 rng(17);
  const auto x = random_rational_matrix(rng, 4);
  const auto dx = x.map_entries<double>([](const Rational& r) { return rat_to_double(r); });
  CHECK(dx.entry(1, 2) == doctest::Approx(rat_to_double(x.entry(1, 2))).epsilon(1e-15));
  CHECK(dx.stored_entries().size() == x.stored_entries().size());
}
