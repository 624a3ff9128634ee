#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unimod/measure.hpp"

namespace unimod {

/// Compensated (Neumaier) summation; series partial sums accumulate through
/// this so tiny tail terms are not lost to cancellation.
class KahanAccumulator {
 public:
  void add(double value) {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value))
      compensation_ += (sum_ - t) + value;
    else
      compensation_ += (value - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

enum class Verdict { Converges, Diverges, Inconclusive };

std::string verdict_name(Verdict v);

struct SeriesVerdict {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<double> partial_sums;
  std::optional<double> limit;          // closed-form limit when available
  std::optional<double> tail_bound;     // upper bound on the dropped tail
  std::optional<double> tail_bound_log10;
  std::optional<int> witness_index;     // summation index at threshold crossing
  std::string method;                   // how the verdict was reached
  std::vector<std::string> flags;

  double estimate() const { return partial_sums.empty() ? 0.0 : partial_sums.back(); }
};

struct SeriesOptions {
  int max_terms = 200;
  double threshold = 1e9;
  double tol = 1e-10;
};

/// S^L_kn = sum_{m>n} b_km / b_nm. Convergence is only asserted with a tail
/// bound (geometric family); divergence either by threshold crossing or by
/// terms bounded away from zero.
SeriesVerdict series_SL(const MeasureParams& mu, int k, int n, const SeriesOptions& opts = {});

/// E(b) = sum_{k<n} S^L_kn / b_kn over n <= max_index.
SeriesVerdict series_E(const MeasureParams& mu, int max_index, const SeriesOptions& opts = {});

/// S^{R,L}_kn = sum_{m>n} b_km / S^L_nm; terms whose inner S^L_nm diverges
/// contribute 0 and are flagged.
SeriesVerdict series_SRL(const MeasureParams& mu, int k, int n, const SeriesOptions& opts = {});

struct RegimeReport {
  std::string regime;
  std::map<TriangularIndex, SeriesVerdict> SL;
  std::map<TriangularIndex, SeriesVerdict> SRL;
  SeriesVerdict E;
  std::vector<std::string> flags;
};

/// Regime of the right regular representation at truncation window:
/// every S^L divergent -> type I_infinity; every S^L convergent with E
/// convergent and every S^{R,L} divergent -> type III_1; anything else mixed.
RegimeReport classify(const MeasureParams& mu, int window, const SeriesOptions& opts = {});

}  // namespace unimod
