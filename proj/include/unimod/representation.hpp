#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "unimod/measure.hpp"

namespace unimod {

using Complex = std::complex<double>;
using Point = UnipotentMatrix<double>;

/// Lazily evaluated vector of the representation space: a label plus an
/// evaluator. Operators wrap the evaluator, so a pipeline touches only the
/// finitely many cocycle factors it names.
struct StateFunction {
  std::string label;
  std::function<Complex(const Point&)> eval;

  Complex operator()(const Point& x) const { return eval(x); }
};

StateFunction constant_function(Complex c);
StateFunction coordinate_function(int k, int n);
/// Five test functions: 1, two coordinates, a degree-2 monomial, and an
/// oscillatory exp(0.7 i x_kn); indices adapt below N = 4.
std::vector<StateFunction> test_battery(int N);

/// (T^R_t f)(x) = rn_right(x,t)^{1/2} f(x t).
StateFunction apply_TR(const MeasureParams& mu, const Point& t, StateFunction f);
/// (T^L_s f)(x) = rn_left(x,s)^{1/2} f(s^{-1} x).
StateFunction apply_TL(const MeasureParams& mu, const Point& s, StateFunction f);
/// (J f)(x) = Delta(x)^{-1/2} conj(f(x^{-1})).
StateFunction apply_J(const MeasureParams& mu, StateFunction f);
/// (Delta^sigma f)(x) = exp(sigma log Delta(x)) f(x); sigma may be complex
/// (sigma = is gives the modular one-parameter group).
StateFunction apply_delta_pow(const MeasureParams& mu, Complex sigma, StateFunction f);
/// (S f)(x) = Delta(x)^{-1} conj(f(x^{-1})); closure of f |-> conj at identity.
StateFunction apply_S(const MeasureParams& mu, StateFunction f);
/// (S* g)(x) = conj(g(x^{-1})).
StateFunction apply_S_star(const MeasureParams& mu, StateFunction f);
/// Multiplication operator by a pointwise symbol.
StateFunction multiply_by(std::function<Complex(const Point&)> symbol, const std::string& symbol_label,
                          StateFunction f);

std::vector<Point> sample_points(const MeasureParams& mu, int N, int count, std::uint64_t seed);

/// Pointwise comparison over a point set; deviation is measured as
/// |a - b| / max(1, |b|), so it is relative for large values and absolute
/// near zero.
struct DeviationReport {
  std::string id;
  int points = 0;
  double max_dev = 0.0;

  bool within(double tol) const { return max_dev <= tol; }
};

DeviationReport compare_pointwise(const std::string& id, const StateFunction& a,
                                  const StateFunction& b, const std::vector<Point>& points);

DeviationReport check_J_involution(const MeasureParams& mu, const StateFunction& f,
                                   const std::vector<Point>& points);
/// J T^R_t J = T^L_t.
DeviationReport check_JTJ(const MeasureParams& mu, const Point& t, const StateFunction& f,
                          const std::vector<Point>& points);
/// S = J Delta^{1/2}, S* S = Delta, S S = id.
std::vector<DeviationReport> check_S_factorization(const MeasureParams& mu, const StateFunction& f,
                                                   const std::vector<Point>& points);
/// T^R_t M_g T^R_{t^{-1}} = M_{g(. t)}.
DeviationReport check_conjugation_lemma(const MeasureParams& mu,
                                        const std::function<Complex(const Point&)>& symbol,
                                        const std::string& symbol_label, const Point& t,
                                        const StateFunction& f, const std::vector<Point>& points);
/// T^R_t T^R_u = T^R_{t u}.
DeviationReport check_TR_homomorphism(const MeasureParams& mu, const Point& t, const Point& u,
                                      const StateFunction& f, const std::vector<Point>& points);
/// T^L and T^R commute.
DeviationReport check_TL_TR_commute(const MeasureParams& mu, const Point& s, const Point& t,
                                    const StateFunction& f, const std::vector<Point>& points);

/// Group commutator {T^R_{E_mm+1(t)}, Delta^{is}} against its closed-form
/// multiplier exp(-is [sum_r b_rm+1 (2t x_rm x_rm+1 + t^2 x_rm^2)
///                  + sum_n b_mn (2t xi_mn xi_m+1n - t^2 xi_m+1n^2)]).
DeviationReport check_group_commutator(const MeasureParams& mu, int m, double t, double s,
                                       const StateFunction& f, const std::vector<Point>& points);
/// The closed-form exponent above, evaluated numerically at x.
double group_commutator_exponent(const MeasureParams& mu, int m, double t, const Point& x);

/// {T_13(t2), {T_23(t1), Delta^{is}}} = multiplication by
/// exp(-is 2 b_13 t1 t2 x_12).
DeviationReport check_nested_commutator(const MeasureParams& mu, double t1, double t2, double s,
                                        const StateFunction& f, const std::vector<Point>& points);

struct McEstimate {
  Complex value;
  double std_error = 0.0;
  int n = 0;
};

/// Monte Carlo <f, g> = integral conj(f) g dmu over mu_b samples; the
/// standard error is the jackknife value, which for the mean equals
/// sample-sd /sqrt(n) per component.
McEstimate mc_inner(const MeasureParams& mu, const StateFunction& f, const StateFunction& g, int N,
                    int nsamples, std::uint64_t seed);

struct StatCheck {
  std::string id;
  double estimate = 0.0;   // mean of the paired differences
  double std_error = 0.0;
  int n = 0;

  /// Within k standard errors, with a tiny absolute floor for the
  /// checks whose differences are pure roundoff.
  bool pass(double k = 3.0) const { return std::abs(estimate) <= k * std_error + 1e-12; }
};

/// Paired Monte Carlo test of ||T^R_t f|| = ||f||.
StatCheck check_unitarity_TR(const MeasureParams& mu, const Point& t, const StateFunction& f, int N,
                             int nsamples, std::uint64_t seed);
StatCheck check_unitarity_TL(const MeasureParams& mu, const Point& s, const StateFunction& f, int N,
                             int nsamples, std::uint64_t seed);
/// Paired Monte Carlo test of <Delta^{is} f, Delta^{is} g> = <f, g>.
StatCheck check_delta_is_isometry(const MeasureParams& mu, double s, const StateFunction& f,
                                  const StateFunction& g, int N, int nsamples, std::uint64_t seed);

struct HistogramSummary {
  int nsamples = 0;
  double min = 0.0, max = 0.0, mean = 0.0, stddev = 0.0;
  double bin_low = 0.0, bin_width = 0.0;
  std::vector<int> bins;
};

/// Distribution of log Delta(x) under mu_b; identically zero when N = 2.
HistogramSummary lnDelta_histogram(const MeasureParams& mu, int N, int nsamples, std::uint64_t seed);

}  // namespace unimod
