#include "unimod/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace unimod {

MeasureParams MeasureParams::geometric(double s) {
  if (!(s > 1.0)) throw std::invalid_argument("geometric family requires s > 1");
  MeasureParams mu;
  mu.kind_ = FamilyKind::Geometric;
  mu.s_ = s;
  return mu;
}

MeasureParams MeasureParams::explicit_matrix(std::map<TriangularIndex, double> entries) {
  if (entries.empty()) throw std::invalid_argument("explicit family requires at least one entry");
  for (const auto& [idx, value] : entries)
    if (!(value > 0.0)) throw std::invalid_argument("weights must be positive");
  MeasureParams mu;
  mu.kind_ = FamilyKind::Explicit;
  mu.entries_ = std::move(entries);
  return mu;
}

MeasureParams MeasureParams::custom(std::function<double(int, int)> rule, std::string rule_name) {
  if (!rule) throw std::invalid_argument("custom family requires a rule");
  MeasureParams mu;
  mu.kind_ = FamilyKind::Custom;
  mu.rule_ = std::move(rule);
  mu.rule_name_ = std::move(rule_name);
  return mu;
}

double MeasureParams::b(int k, int n) const {
  tri(k, n);
  switch (kind_) {
    case FamilyKind::Geometric:
      return std::exp(log_b(k, n));
    case FamilyKind::Explicit: {
      auto it = entries_.find(TriangularIndex{k, n});
      if (it == entries_.end()) throw std::out_of_range("weight position outside explicit table");
      return it->second;
    }
    case FamilyKind::Custom: {
      const double value = rule_(k, n);
      if (!(value > 0.0)) throw std::domain_error("custom rule produced a non-positive weight");
      return value;
    }
  }
  throw std::logic_error("unreachable");
}

double MeasureParams::log_b(int k, int n) const {
  if (kind_ == FamilyKind::Geometric) {
    tri(k, n);
    return static_cast<double>(k) * static_cast<double>(n) * std::log(s_);
  }
  return std::log(b(k, n));
}

int MeasureParams::horizon() const {
  if (kind_ != FamilyKind::Explicit) return std::numeric_limits<int>::max();
  int max_n = 0;
  for (const auto& [idx, value] : entries_) max_n = std::max(max_n, idx.n);
  return max_n;
}

std::string MeasureParams::describe() const {
  switch (kind_) {
    case FamilyKind::Geometric:
      return "geometric(s=" + std::to_string(s_) + ")";
    case FamilyKind::Explicit:
      return "explicit(" + std::to_string(entries_.size()) + " entries)";
    case FamilyKind::Custom:
      return "custom(" + rule_name_ + ")";
  }
  return "";
}

double GaussianStream::uniform01() {
  // 53-bit mantissa from the engine's specified output; (0,1].
  return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double GaussianStream::next() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform01();
  const double u2 = uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

UnipotentMatrix<double> sample(const MeasureParams& mu, int N, GaussianStream& stream) {
  UnipotentMatrix<double> x(N);
  for (int k = 1; k < N; ++k) {
    for (int n = k + 1; n <= N; ++n) {
      const double sigma = std::exp(-0.5 * (std::numbers::ln2 + mu.log_b(k, n)));
      x.set(k, n, sigma * stream.next());
    }
  }
  return x;
}

UnipotentMatrix<double> sample(const MeasureParams& mu, int N, std::uint64_t seed) {
  GaussianStream stream(seed);
  return sample(mu, N, stream);
}

double log_density(const MeasureParams& mu, const UnipotentMatrix<double>& x, int N) {
  if (x.size() < N) throw std::invalid_argument("point smaller than truncation size");
  double total = 0.0;
  for (int k = 1; k < N; ++k) {
    for (int n = k + 1; n <= N; ++n) {
      const double log_b = mu.log_b(k, n);
      // b x^2 evaluated as (b^{1/2} x)^2 so huge weights cannot overflow
      // before the entry's own smallness cancels them.
      const double v = std::exp(0.5 * log_b) * x.entry(k, n);
      total += 0.5 * (log_b - std::log(std::numbers::pi)) - v * v;
    }
  }
  return total;
}

double rn_right(const MeasureParams& mu, const UnipotentMatrix<double>& x,
                const UnipotentMatrix<double>& t) {
  const int N = x.size();
  return std::exp(log_density(mu, multiply(x, t), N) - log_density(mu, x, N));
}

double rn_left(const MeasureParams& mu, const UnipotentMatrix<double>& x,
               const UnipotentMatrix<double>& s) {
  const int N = x.size();
  return std::exp(log_density(mu, multiply(invert(s), x), N) - log_density(mu, x, N));
}

double log_delta_value(const MeasureParams& mu, const UnipotentMatrix<double>& x, int N) {
  if (x.size() < N) throw std::invalid_argument("point smaller than truncation size");
  const auto xinv = invert(x);
  double total = 0.0;
  for (int k = 1; k < N; ++k) {
    for (int n = k + 1; n <= N; ++n) {
      const double sb = std::exp(0.5 * mu.log_b(k, n));
      const double u = sb * x.entry(k, n);
      const double v = sb * xinv.entry(k, n);
      total -= u * u - v * v;
    }
  }
  return total;
}

double delta_value(const MeasureParams& mu, const UnipotentMatrix<double>& x, int N) {
  return std::exp(log_delta_value(mu, x, N));
}

SamplerMomentReport sampler_moments(const MeasureParams& mu, int N, int nsamples,
                                    std::uint64_t seed) {
  if (nsamples < 2) throw std::invalid_argument("sampler_moments requires nsamples >= 2");
  SamplerMomentReport report;
  report.nsamples = nsamples;

  std::map<TriangularIndex, std::pair<double, double>> acc;  // sum, sum of squares
  GaussianStream stream(seed);
  for (int i = 0; i < nsamples; ++i) {
    const auto x = sample(mu, N, stream);
    for (int k = 1; k < N; ++k) {
      for (int n = k + 1; n <= N; ++n) {
        auto& [sum, sum2] = acc[TriangularIndex{k, n}];
        const double v = x.entry(k, n);
        sum += v;
        sum2 += v * v;
      }
    }
  }

  for (const auto& [idx, sums] : acc) {
    EntryMoment m;
    m.index = idx;
    m.mean = sums.first / nsamples;
    m.variance = sums.second / nsamples - m.mean * m.mean;
    m.expected_variance = 0.5 * std::exp(-mu.log_b(idx.k, idx.n));
    m.variance_rel_err = std::abs(m.variance - m.expected_variance) / m.expected_variance;
    report.entries.push_back(m);
    report.max_variance_rel_err = std::max(report.max_variance_rel_err, m.variance_rel_err);
    // Normalize the mean by the entry scale so one number covers all entries.
    report.max_abs_mean =
        std::max(report.max_abs_mean, std::abs(m.mean) / std::sqrt(m.expected_variance));
  }
  return report;
}

}  // namespace unimod
