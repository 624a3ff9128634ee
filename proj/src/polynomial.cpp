#include "unimod/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace unimod {

Monomial Monomial::variable(const Variable& v, int exp) {
  if (exp < 0) throw std::invalid_argument("monomial exponent must be >= 0");
  Monomial m;
  if (exp > 0) m.factors_.emplace_back(v, exp);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

int Monomial::exponent(const Variable& v) const {
  for (const auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->first < b->first) {
      out.factors_.push_back(*a++);
    } else if (b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.factors_.insert(out.factors_.end(), a, factors_.end());
  out.factors_.insert(out.factors_.end(), b, other.factors_.end());
  return out;
}

Monomial Monomial::divide_once(const Variable& v) const {
  Monomial out;
  bool found = false;
  for (const auto& [w, e] : factors_) {
    if (w == v) {
      found = true;
      if (e > 1) out.factors_.emplace_back(w, e - 1);
    } else {
      out.factors_.emplace_back(w, e);
    }
  }
  if (!found) throw std::logic_error("divide_once: variable absent from monomial");
  return out;
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += "*";
    s += v.name();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

Polynomial::Polynomial(const Rational& c) {
  if (!rat_is_zero(c)) terms_.emplace(Monomial{}, c);
}

Polynomial::Polynomial(long c) : Polynomial(Rational(c)) {}

Polynomial Polynomial::variable(const Variable& v) {
  Polynomial p;
  p.terms_.emplace(Monomial::variable(v), Rational(1));
  return p;
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial{}); }

std::set<Variable> Polynomial::variables() const {
  std::set<Variable> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) out.insert(v);
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (rat_is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (rat_is_zero(it->second)) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) out.add_term(ma.times(mb), ca * cb);
  return out;
}

Polynomial Polynomial::pow(unsigned exp) const {
  Polynomial out{Rational(1)};
  Polynomial base = *this;
  unsigned e = exp;
  while (e > 0) {
    if (e & 1u) out = out * base;
    base = base * base;
    e >>= 1u;
  }
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial out;
  if (rat_is_zero(c)) return out;
  for (const auto& [m, pc] : p.terms_) out.terms_.emplace(m, c * pc);
  return out;
}

Polynomial Polynomial::derivative(const Variable& v) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(v);
    if (e > 0) out.add_term(m.divide_once(v), c * Rational(e));
  }
  return out;
}

Polynomial Polynomial::substitute(const Variable& v, const Polynomial& value) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Polynomial term{c};
    Monomial rest;
    for (const auto& [w, e] : m.factors()) {
      if (w == v)
        term = term * value.pow(static_cast<unsigned>(e));
      else
        rest = rest.times(Monomial::variable(w, e));
    }
    Polynomial rest_poly;
    rest_poly.add_term(rest, Rational(1));
    out += term * rest_poly;
  }
  return out;
}

Polynomial Polynomial::substitute_coordinates(const std::map<TriangularIndex, Polynomial>& values) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Polynomial term{c};
    Monomial rest;
    for (const auto& [w, e] : m.factors()) {
      if (w.is_coordinate()) {
        auto it = values.find(w.index());
        if (it != values.end()) {
          term = term * it->second.pow(static_cast<unsigned>(e));
          continue;
        }
      }
      rest = rest.times(Monomial::variable(w, e));
    }
    Polynomial rest_poly;
    rest_poly.add_term(rest, Rational(1));
    out += term * rest_poly;
  }
  return out;
}

Rational Polynomial::eval_exact(const std::function<Rational(const Variable&)>& assign) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [v, e] : m.factors()) term *= rat_pow(assign(v), static_cast<unsigned>(e));
    total += term;
  }
  return total;
}

double Polynomial::eval(const std::function<double(const Variable&)>& assign) const {
  double total = 0.0;
  for (const auto& [m, c] : terms_) {
    double term = rat_to_double(c);
    for (const auto& [v, e] : m.factors()) term *= std::pow(assign(v), e);
    total += term;
  }
  return total;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    const bool unit = mag == 1;
    if (!unit || m.is_constant()) out << rat_str(mag);
    if (!m.is_constant()) {
      if (!unit) out << "*";
      out << m.str();
    }
  }
  return out.str();
}

}  // namespace unimod
