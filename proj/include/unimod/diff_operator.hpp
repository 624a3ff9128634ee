#pragma once

#include <map>
#include <string>

#include "unimod/polynomial.hpp"
#include "unimod/variable.hpp"

namespace unimod {

/// Differential operator of order <= 1 in the coordinate variables:
/// a zero-order (multiplication) part plus polynomial coefficients of the
/// partials d/dx_kn. Commutators of two such operators stay in this class.
class DiffOperator {
 public:
  DiffOperator() = default;

  static DiffOperator multiplication(const Polynomial& p);
  static DiffOperator partial(int k, int n);

  const Polynomial& zero_order() const { return zero_order_; }
  const std::map<TriangularIndex, Polynomial>& first_order() const { return first_order_; }

  void set_zero_order(const Polynomial& p) { zero_order_ = p; }
  void add_partial_term(const TriangularIndex& idx, const Polynomial& coefficient);

  bool is_zero() const { return zero_order_.is_zero() && first_order_.empty(); }
  bool operator==(const DiffOperator&) const = default;

  Polynomial apply(const Polynomial& p) const;

  std::string str() const;

 private:
  Polynomial zero_order_;
  std::map<TriangularIndex, Polynomial> first_order_;
};

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b);

}  // namespace unimod
