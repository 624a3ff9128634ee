#pragma once

#include <map>
#include <string>

#include "unimod/diff_operator.hpp"
#include "unimod/matrix.hpp"
#include "unimod/polynomial.hpp"

namespace unimod {

/// Matrix whose (k,n) entry is the coordinate variable x_kn.
UnipotentMatrix<Polynomial> symbolic_matrix(int N);

/// Matrix whose (k,n) entry is the parameter <prefix><k><n>; gives a second
/// fully symbolic group element independent of the coordinates.
UnipotentMatrix<Polynomial> parameter_matrix(int N, const std::string& prefix);

/// Inverse coordinate x_kn^{-1} by the first-row recursion
/// x_kn^{-1} = -x_kn - sum_{r=k+1}^{n-1} x_kr * x_rn^{-1}.
Polynomial inverse_coordinate_recursive(int k, int n);

/// Inverse coordinate by the chain expansion
/// sum_{r>=0} (-1)^{r+1} sum_{k<i_1<...<i_r<n} x_{k,i_1}*...*x_{i_r,n};
/// interior indices run strictly between k and n.
Polynomial inverse_coordinate_closed(int k, int n);

/// All inverse coordinates of the size-N matrix, keyed by position.
std::map<TriangularIndex, Polynomial> inverse_matrix_map(int N);

/// w_kn = x_kn^2 - (x_kn^{-1})^2; vanishes when n = k+1.
Polynomial w_poly(int k, int n);

/// L_N = sum_{k<n<=N} b_kn * w_kn. The modular function is
/// Delta(x) = exp(-L_N(x)); brackets are reported in terms of L_N.
Polynomial ln_delta_poly(int N);

/// Right-invariant generator A^R_kn = sum_{r=1}^{k-1} x_rk D_rn + D_kn,
/// the derivative at t = 0 of right translation by E_kn(t).
DiffOperator right_generator(int k, int n, int N);

/// Substitutes x |-> x * g into p, where g has polynomial entries.
Polynomial substitute_right(const Polynomial& p, const UnipotentMatrix<Polynomial>& g);

}  // namespace unimod
