#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace unimod {

/// Strictly upper-triangular matrix position 1 <= k < n.
struct TriangularIndex {
  int k = 0;
  int n = 0;

  friend auto operator<=>(const TriangularIndex&, const TriangularIndex&) = default;
};

inline TriangularIndex tri(int k, int n) {
  if (!(1 <= k && k < n)) throw std::invalid_argument("triangular index requires 1 <= k < n");
  return TriangularIndex{k, n};
}

/// One indeterminate of the coefficient ring: a group coordinate x_kn, a
/// measure weight b_kn, or a named formal parameter (t, s, ...).
class Variable {
 public:
  enum class Kind : std::uint8_t { Weight = 0, Parameter = 1, Coordinate = 2 };

  static Variable coordinate(int k, int n) { return Variable(Kind::Coordinate, tri(k, n)); }
  static Variable weight(int k, int n) { return Variable(Kind::Weight, tri(k, n)); }

  static Variable parameter(std::string_view name) {
    if (name.empty() || name.size() >= 8) throw std::invalid_argument("parameter name must have 1..7 chars");
    Variable v(Kind::Parameter, TriangularIndex{0, 0});
    for (std::size_t i = 0; i < name.size(); ++i) v.name_[i] = name[i];
    return v;
  }

  Kind kind() const { return kind_; }
  bool is_coordinate() const { return kind_ == Kind::Coordinate; }
  bool is_weight() const { return kind_ == Kind::Weight; }
  bool is_parameter() const { return kind_ == Kind::Parameter; }

  TriangularIndex index() const {
    if (kind_ == Kind::Parameter) throw std::logic_error("parameter variable has no index");
    return index_;
  }

  std::string name() const {
    if (kind_ == Kind::Parameter) return std::string(name_.data());
    const std::string head = kind_ == Kind::Coordinate ? "x" : "b";
    if (index_.k < 10 && index_.n < 10)
      return head + std::to_string(index_.k) + std::to_string(index_.n);
    return head + "[" + std::to_string(index_.k) + "," + std::to_string(index_.n) + "]";
  }

  friend auto operator<=>(const Variable&, const Variable&) = default;

 private:
  Variable(Kind kind, TriangularIndex index) : kind_(kind), index_(index) { name_.fill('\0'); }

  Kind kind_;
  TriangularIndex index_;
  std::array<char, 8> name_{};
};

}  // namespace unimod
