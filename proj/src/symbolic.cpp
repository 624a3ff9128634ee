#include "unimod/symbolic.hpp"

#include <stdexcept>
#include <vector>

namespace unimod {

UnipotentMatrix<Polynomial> symbolic_matrix(int N) {
  UnipotentMatrix<Polynomial> x(N);
  for (int k = 1; k < N; ++k)
    for (int n = k + 1; n <= N; ++n) x.set(k, n, coord(k, n));
  return x;
}

UnipotentMatrix<Polynomial> parameter_matrix(int N, const std::string& prefix) {
  UnipotentMatrix<Polynomial> t(N);
  for (int k = 1; k < N; ++k)
    for (int n = k + 1; n <= N; ++n)
      t.set(k, n, param(prefix + std::to_string(k) + std::to_string(n)));
  return t;
}

Polynomial inverse_coordinate_recursive(int k, int n) {
  tri(k, n);
  Polynomial out = -coord(k, n);
  for (int r = k + 1; r < n; ++r) out -= coord(k, r) * inverse_coordinate_recursive(r, n);
  return out;
}

namespace {

void chains_from(int k, int n, int low, Polynomial prefix, int sign, Polynomial& acc) {
  acc += Rational(-sign) * (prefix * coord(low, n));
  for (int i = low + 1; i < n; ++i)
    chains_from(k, n, i, prefix * coord(low, i), -sign, acc);
}

}  // namespace

Polynomial inverse_coordinate_closed(int k, int n) {
  tri(k, n);
  Polynomial acc;
  chains_from(k, n, k, Polynomial{Rational(1)}, 1, acc);
  return acc;
}

std::map<TriangularIndex, Polynomial> inverse_matrix_map(int N) {
  std::map<TriangularIndex, Polynomial> out;
  for (int k = 1; k < N; ++k)
    for (int n = k + 1; n <= N; ++n) out.emplace(TriangularIndex{k, n}, inverse_coordinate_recursive(k, n));
  return out;
}

Polynomial w_poly(int k, int n) {
  const Polynomial x = coord(k, n);
  const Polynomial xi = inverse_coordinate_recursive(k, n);
  return x * x - xi * xi;
}

Polynomial ln_delta_poly(int N) {
  Polynomial out;
  for (int k = 1; k < N; ++k)
    for (int n = k + 1; n <= N; ++n) out += weight(k, n) * w_poly(k, n);
  return out;
}

DiffOperator right_generator(int k, int n, int N) {
  tri(k, n);
  if (n > N) throw std::invalid_argument("right_generator requires n <= N");
  DiffOperator op = DiffOperator::partial(k, n);
  for (int r = 1; r < k; ++r) op.add_partial_term(tri(r, n), coord(r, k));
  return op;
}

Polynomial substitute_right(const Polynomial& p, const UnipotentMatrix<Polynomial>& g) {
  const int N = g.size();
  std::map<TriangularIndex, Polynomial> images;
  for (int k = 1; k < N; ++k) {
    for (int n = k + 1; n <= N; ++n) {
      Polynomial image = coord(k, n) + g.entry(k, n);
      for (int r = k + 1; r < n; ++r) image += coord(k, r) * g.entry(r, n);
      images.emplace(TriangularIndex{k, n}, image);
    }
  }
  return p.substitute_coordinates(images);
}

}  // namespace unimod
