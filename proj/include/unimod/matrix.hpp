#pragma once

#include <functional>
#include <map>
#include <stdexcept>

#include "unimod/polynomial.hpp"
#include "unimod/rational.hpp"
#include "unimod/variable.hpp"

namespace unimod {

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double v) { return v == 0.0; }
};

template <>
struct scalar_traits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& v) { return rat_is_zero(v); }
};

template <>
struct scalar_traits<Polynomial> {
  static Polynomial zero() { return Polynomial{}; }
  static Polynomial one() { return Polynomial{Rational(1)}; }
  static bool is_zero(const Polynomial& v) { return v.is_zero(); }
};

/// Upper-triangular matrix with implicit unit diagonal; only strictly
/// upper-triangular entries are stored. Entry accessors return the implicit 1
/// on the diagonal and 0 below it.
template <class S>
class UnipotentMatrix {
 public:
  explicit UnipotentMatrix(int size) : size_(size) {
    if (size < 1) throw std::invalid_argument("matrix size must be >= 1");
  }

  static UnipotentMatrix identity(int size) { return UnipotentMatrix(size); }

  int size() const { return size_; }

  S entry(int k, int n) const {
    check_range(k);
    check_range(n);
    if (k == n) return scalar_traits<S>::one();
    if (k > n) return scalar_traits<S>::zero();
    auto it = entries_.find(TriangularIndex{k, n});
    return it == entries_.end() ? scalar_traits<S>::zero() : it->second;
  }

  void set(int k, int n, const S& value) {
    check_range(k);
    check_range(n);
    if (k >= n) throw std::invalid_argument("only strictly upper entries are writable");
    if (scalar_traits<S>::is_zero(value))
      entries_.erase(TriangularIndex{k, n});
    else
      entries_[TriangularIndex{k, n}] = value;
  }

  const std::map<TriangularIndex, S>& stored_entries() const { return entries_; }

  bool operator==(const UnipotentMatrix&) const = default;

  template <class T>
  UnipotentMatrix<T> map_entries(const std::function<T(const S&)>& fn) const {
    UnipotentMatrix<T> out(size_);
    for (const auto& [idx, value] : entries_) out.set(idx.k, idx.n, fn(value));
    return out;
  }

 private:
  void check_range(int i) const {
    if (i < 1 || i > size_) throw std::out_of_range("matrix index out of range");
  }

  int size_ = 1;
  std::map<TriangularIndex, S> entries_;
};

template <class S>
UnipotentMatrix<S> multiply(const UnipotentMatrix<S>& a, const UnipotentMatrix<S>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("size mismatch in multiply");
  const int N = a.size();
  UnipotentMatrix<S> out(N);
  for (int k = 1; k < N; ++k) {
    for (int n = k + 1; n <= N; ++n) {
      S acc = a.entry(k, n) + b.entry(k, n);
      for (int r = k + 1; r < n; ++r) acc = acc + a.entry(k, r) * b.entry(r, n);
      out.set(k, n, acc);
    }
  }
  return out;
}

/// Inverse by plain triangular back-substitution, solving x * y = 1 column by
/// column. This is the oracle the symbolic inverse formulas are tested
/// against; it shares no code with them.
template <class S>
UnipotentMatrix<S> invert(const UnipotentMatrix<S>& x) {
  const int N = x.size();
  UnipotentMatrix<S> y(N);
  for (int n = 2; n <= N; ++n) {
    for (int k = n - 1; k >= 1; --k) {
      S acc = scalar_traits<S>::zero();
      for (int r = k + 1; r <= n; ++r) acc = acc + x.entry(k, r) * y.entry(r, n);
      y.set(k, n, scalar_traits<S>::zero() - acc);
    }
  }
  return y;
}

template <class S>
UnipotentMatrix<S> elementary(int size, int k, int n, const S& t) {
  UnipotentMatrix<S> out(size);
  if (!(1 <= k && k < n && n <= size)) throw std::invalid_argument("elementary requires 1 <= k < n <= size");
  out.set(k, n, t);
  return out;
}

/// Embeds into a larger size, new rows and columns identity. This is the
/// inductive-limit inclusion; group operations commute with it.
template <class S>
UnipotentMatrix<S> embed(const UnipotentMatrix<S>& a, int size) {
  if (size < a.size()) throw std::invalid_argument("embed target smaller than source");
  UnipotentMatrix<S> out(size);
  for (const auto& [idx, value] : a.stored_entries()) out.set(idx.k, idx.n, value);
  return out;
}

/// Checks invert(x) * invert(t) == invert(t * x), the identity making
/// group inversion intertwine left and right translation.
template <class S>
bool phi_inversion_identity_check(const UnipotentMatrix<S>& t, const UnipotentMatrix<S>& x) {
  return multiply(invert(x), invert(t)) == invert(multiply(t, x));
}

}  // namespace unimod
