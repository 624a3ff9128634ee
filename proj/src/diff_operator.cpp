#include "unimod/diff_operator.hpp"

namespace unimod {

DiffOperator DiffOperator::multiplication(const Polynomial& p) {
  DiffOperator op;
  op.zero_order_ = p;
  return op;
}

DiffOperator DiffOperator::partial(int k, int n) {
  DiffOperator op;
  op.first_order_.emplace(tri(k, n), Polynomial{Rational(1)});
  return op;
}

void DiffOperator::add_partial_term(const TriangularIndex& idx, const Polynomial& coefficient) {
  auto [it, inserted] = first_order_.emplace(idx, coefficient);
  if (!inserted) it->second += coefficient;
  if (it->second.is_zero()) first_order_.erase(it);
}

Polynomial DiffOperator::apply(const Polynomial& p) const {
  Polynomial out = zero_order_ * p;
  for (const auto& [idx, coefficient] : first_order_)
    out += coefficient * p.derivative(Variable::coordinate(idx.k, idx.n));
  return out;
}

std::string DiffOperator::str() const {
  std::string s;
  for (const auto& [idx, coefficient] : first_order_) {
    if (!s.empty()) s += " + ";
    s += "(" + coefficient.str() + ")*D" + Variable::coordinate(idx.k, idx.n).name().substr(1);
  }
  if (!zero_order_.is_zero() || s.empty()) {
    if (!s.empty()) s += " + ";
    s += "(" + zero_order_.str() + ")";
  }
  return s;
}

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b) {
  DiffOperator out;

  auto derive_along = [](const DiffOperator& op, const Polynomial& target) {
    Polynomial acc;
    for (const auto& [idx, coefficient] : op.first_order())
      acc += coefficient * target.derivative(Variable::coordinate(idx.k, idx.n));
    return acc;
  };

  out.set_zero_order(derive_along(a, b.zero_order()) - derive_along(b, a.zero_order()));
  for (const auto& [idx, q_j] : b.first_order()) out.add_partial_term(idx, derive_along(a, q_j));
  for (const auto& [idx, p_j] : a.first_order()) out.add_partial_term(idx, -derive_along(b, p_j));
  return out;
}

}  // namespace unimod
