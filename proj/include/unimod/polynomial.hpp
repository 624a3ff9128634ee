#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "unimod/rational.hpp"
#include "unimod/variable.hpp"

namespace unimod {

/// Power product of variables, kept sorted with positive exponents.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(const Variable& v, int exp = 1);

  bool is_constant() const { return factors_.empty(); }
  int degree() const;
  int exponent(const Variable& v) const;
  const std::vector<std::pair<Variable, int>>& factors() const { return factors_; }

  Monomial times(const Monomial& other) const;
  /// Removes one power of v; requires exponent(v) > 0.
  Monomial divide_once(const Variable& v) const;

  std::string str() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<Variable, int>> factors_;
};

/// Multivariate polynomial with exact rational coefficients, stored in
/// canonical form (sorted monomials, no zero coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Rational& c);
  explicit Polynomial(long c);

  static Polynomial variable(const Variable& v);

  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  /// Coefficient of the given monomial (zero if absent).
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  std::set<Variable> variables() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator+(const Polynomial& other) const { Polynomial r = *this; r += other; return r; }
  Polynomial operator-(const Polynomial& other) const { Polynomial r = *this; r -= other; return r; }
  Polynomial pow(unsigned exp) const;

  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  bool operator==(const Polynomial&) const = default;

  Polynomial derivative(const Variable& v) const;
  Polynomial substitute(const Variable& v, const Polynomial& value) const;
  /// Substitutes every coordinate variable x_kn through the map; weights and
  /// parameters pass through unchanged. Missing coordinates stay themselves.
  Polynomial substitute_coordinates(const std::map<TriangularIndex, Polynomial>& values) const;

  Rational eval_exact(const std::function<Rational(const Variable&)>& assign) const;
  double eval(const std::function<double(const Variable&)>& assign) const;

  std::string str() const;

  void add_term(const Monomial& m, const Rational& c);

 private:
  std::map<Monomial, Rational> terms_;
};

inline Polynomial coord(int k, int n) { return Polynomial::variable(Variable::coordinate(k, n)); }
inline Polynomial weight(int k, int n) { return Polynomial::variable(Variable::weight(k, n)); }
inline Polynomial param(std::string_view name) { return Polynomial::variable(Variable::parameter(name)); }

}  // namespace unimod
