#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "test_util.hpp"
#include "unimod/polynomial.hpp"

using namespace unimod;
using namespace unimod::testutil;

TEST_CASE("rational helpers") {
  CHECK(rat(1, 3) + rat(1, 6) == rat(1, 2));
  CHECK(rat_is_zero(rat(0)));
  CHECK(rat_pow(rat(2, 3), 3) == rat(8, 27));
  CHECK(rat_pow(rat(5), 0) == rat(1));
  CHECK(rat_str(rat(-2, 4)) == "-1/2");
  CHECK(rat_to_double(rat(1, 4)) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("triangular index validation") {
  CHECK_NOTHROW(tri(1, 2));
  CHECK_THROWS_AS(tri(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(tri(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(tri(0, 1), std::invalid_argument);
}

TEST_CASE("variable naming and ordering") {
  CHECK(coord(1, 2).variables().size() == 1);
  CHECK(Variable::coordinate(1, 2).name() == "x12");
  CHECK(Variable::weight(1, 3).name() == "b13");
  CHECK(Variable::coordinate(10, 12).name() == "x[10,12]");
  CHECK(Variable::parameter("t").name() == "t");
  // weights sort before parameters before coordinates
  CHECK(Variable::weight(1, 2) < Variable::parameter("t"));
  CHECK(Variable::parameter("t") < Variable::coordinate(1, 2));
}

TEST_CASE("monomial arithmetic") {
  const Monomial a = Monomial::variable(Variable::coordinate(1, 2), 2);
  const Monomial b = Monomial::variable(Variable::coordinate(2, 3), 1);
  const Monomial ab = a.times(b);
  CHECK(ab.degree() == 3);
  CHECK(ab.exponent(Variable::coordinate(1, 2)) == 2);
  CHECK(ab.exponent(Variable::coordinate(2, 3)) == 1);
  CHECK(ab.exponent(Variable::coordinate(1, 3)) == 0);
  CHECK(ab.str() == "x12^2*x23");

  const Monomial q = ab.divide_once(Variable::coordinate(1, 2));
  CHECK(q.str() == "x12*x23");
  CHECK_THROWS_AS(ab.divide_once(Variable::coordinate(1, 3)), std::logic_error);
}

TEST_CASE("polynomial canonical form") {
  const Polynomial x12 = coord(1, 2);
  const Polynomial x23 = coord(2, 3);
  Polynomial p = x12 * x23 + Polynomial(rat(3)) - x12 * x23;
  CHECK(p.term_count() == 1);
  CHECK(p.constant_term() == rat(3));
  CHECK((p - Polynomial(rat(3))).is_zero());

  const Polynomial q = x12 + x23;
  CHECK(q.str() == "x12 + x23");
  CHECK((x12 - x12).str() == "0");
  CHECK((Polynomial(rat(-1)) * x12).str() == "-x12");
  CHECK((x12 * x12 - Polynomial(rat(1, 2)) * x23).str() == "x12^2 - 1/2*x23");
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  const auto pool = coordinate_pool(4);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial a = random_polynomial(rng, pool, 4, 2);
    const Polynomial b = random_polynomial(rng, pool, 4, 2);
    const Polynomial c = random_polynomial(rng, pool, 4, 2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * Polynomial(rat(1)) == a);
    CHECK((a * Polynomial(rat(0))).is_zero());
  }
}

TEST_CASE("pow matches repeated multiplication") {
  const Polynomial p = coord(1, 2) + Polynomial(rat(1));
  CHECK(p.pow(0) == Polynomial(rat(1)));
  CHECK(p.pow(1) == p);
  CHECK(p.pow(3) == p * p * p);
}

TEST_CASE("derivative is a derivation") {
  std::mt19937_64 rng(11);
  const auto pool = coordinate_pool(4);
  const Variable v = Variable::coordinate(1, 2);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial a = random_polynomial(rng, pool, 4, 3);
    const Polynomial b = random_polynomial(rng, pool, 4, 3);
    CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
    CHECK((a + b).derivative(v) == a.derivative(v) + b.derivative(v));
  }
  // d/dx12 (x12^3) = 3 x12^2
  const Polynomial x12 = coord(1, 2);
  CHECK(x12.pow(3).derivative(v) == Polynomial(rat(3)) * x12 * x12);
  CHECK(Polynomial(rat(5)).derivative(v).is_zero());
}

TEST_CASE("substitution") {
  const Polynomial x12 = coord(1, 2);
  const Polynomial x13 = coord(1, 3);
  const Polynomial p = x12 * x12 + x13;
  CHECK(p.substitute(Variable::coordinate(1, 2), Polynomial(rat(2))) ==
        Polynomial(rat(4)) + x13);

  std::map<TriangularIndex, Polynomial> images;
  images[tri(1, 2)] = x12 + Polynomial(rat(1));
  const Polynomial q = p.substitute_coordinates(images);
  CHECK(q == x12 * x12 + Polynomial(rat(2)) * x12 + Polynomial(rat(1)) + x13);

  // parameters survive coordinate substitution untouched
  const Polynomial withparam = param("t") * x12;
  CHECK(withparam.substitute_coordinates(images) == param("t") * (x12 + Polynomial(rat(1))));
}

TEST_CASE("exact and floating evaluation") {
  const Polynomial p = coord(1, 2) * coord(1, 2) + Polynomial(rat(1, 2)) * coord(2, 3);
  const auto exact = p.eval_exact([](const Variable& v) {
    return v == Variable::coordinate(1, 2) ? rat(3) : rat(4);
  });
  CHECK(exact == rat(11));
  const double approx = p.eval([](const Variable& v) {
    return v == Variable::coordinate(1, 2) ? 3.0 : 4.0;
  });
  CHECK(approx == doctest::Approx(11.0).epsilon(1e-14));
}

TEST_CASE("variables listing") {
  const Polynomial p = coord(1, 2) * weight(1, 3) + param("t");
  const auto vars = p.variables();
  CHECK(vars.size() == 3);
}
