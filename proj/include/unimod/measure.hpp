#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "unimod/matrix.hpp"
#include "unimod/variable.hpp"

namespace unimod {

enum class FamilyKind { Geometric, Explicit, Custom };

/// Weight family b_kn > 0 of the Gaussian product measure with density
/// prod (b_kn/pi)^{1/2} exp(-b_kn x_kn^2); entry x_kn has variance 1/(2 b_kn).
class MeasureParams {
 public:
  /// b_kn = s^{k n}, s > 1.
  static MeasureParams geometric(double s);
  /// Finite table of weights; positions outside it are an error.
  static MeasureParams explicit_matrix(std::map<TriangularIndex, double> entries);
  /// Arbitrary positive rule (k,n) -> b_kn.
  static MeasureParams custom(std::function<double(int, int)> rule, std::string rule_name);

  FamilyKind kind() const { return kind_; }
  double s() const { return s_; }
  const std::string& rule_name() const { return rule_name_; }

  /// b_kn as a double; can overflow for geometric weights at large k*n, so
  /// series code works with log_b instead.
  double b(int k, int n) const;
  /// ln b_kn, exact in the exponent for the geometric family.
  double log_b(int k, int n) const;

  /// Largest row/column index the family can be evaluated at (explicit
  /// tables are bounded; geometric and custom rules are not).
  int horizon() const;
  std::string describe() const;

 private:
  MeasureParams() = default;

  FamilyKind kind_ = FamilyKind::Geometric;
  double s_ = 2.0;
  std::map<TriangularIndex, double> entries_;
  std::function<double(int, int)> rule_;
  std::string rule_name_;
};

/// Deterministic standard-normal stream: Box-Muller over the specified
/// mt19937_64 bit sequence, so equal seeds give identical values on every
/// platform (std::normal_distribution would not).
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double next();

 private:
  double uniform01();

  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// One mu_b-distributed point of size N: entry (k,n) ~ N(0, 1/(2 b_kn)),
/// drawn in row-major position order.
UnipotentMatrix<double> sample(const MeasureParams& mu, int N, GaussianStream& stream);
UnipotentMatrix<double> sample(const MeasureParams& mu, int N, std::uint64_t seed);

/// ln of the density of mu_b at x, truncated at size N:
/// sum_{k<n<=N} [ (1/2) ln(b_kn/pi) - b_kn x_kn^2 ].
double log_density(const MeasureParams& mu, const UnipotentMatrix<double>& x, int N);

/// Radon-Nikodym cocycle of right translation,
/// d mu(x t)/d mu(x) = exp(log_density(x t) - log_density(x)).
double rn_right(const MeasureParams& mu, const UnipotentMatrix<double>& x,
                const UnipotentMatrix<double>& t);

/// Cocycle of left translation by s^{-1}: d mu(s^{-1} x)/d mu(x).
double rn_left(const MeasureParams& mu, const UnipotentMatrix<double>& x,
               const UnipotentMatrix<double>& s);

/// -sum b_kn w_kn(x) with w_kn = x_kn^2 - (x_kn^{-1})^2; the modular function
/// is Delta(x) = exp of this.
double log_delta_value(const MeasureParams& mu, const UnipotentMatrix<double>& x, int N);

/// Delta(x) = dmu(x)/dmu(x^{-1}); computed through w_kn, tested against the
/// density-ratio route.
double delta_value(const MeasureParams& mu, const UnipotentMatrix<double>& x, int N);

struct EntryMoment {
  TriangularIndex index;
  double mean = 0.0;
  double variance = 0.0;
  double expected_variance = 0.0;
  double variance_rel_err = 0.0;
};

struct SamplerMomentReport {
  std::vector<EntryMoment> entries;
  double max_variance_rel_err = 0.0;
  double max_abs_mean = 0.0;
  int nsamples = 0;
};

/// Empirical per-entry mean and variance of the sampler against 1/(2 b_kn).
SamplerMomentReport sampler_moments(const MeasureParams& mu, int N, int nsamples,
                                    std::uint64_t seed);

}  // namespace unimod
