#include "unimod/series.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace unimod {

namespace {

constexpr double kLn10 = 2.302585092994045684;

std::string pos(int k, int n) { return "(" + std::to_string(k) + "," + std::to_string(n) + ")"; }

/// ln S^L_kn for the geometric family: the series is geometric with ratio
/// q = s^{k-n}, so S^L_kn = q^{n+1}/(1-q).
double log_SL_geometric(double log_s, int k, int n) {
  const double lq = (k - n) * log_s;
  return lq * (n + 1) - std::log1p(-std::exp(lq));
}

void set_tail(SeriesVerdict& v, double log_tail) {
  v.tail_bound_log10 = log_tail / kLn10;
  v.tail_bound = std::max(std::exp(log_tail), std::numeric_limits<double>::min());
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Converges:
      return "converges";
    case Verdict::Diverges:
      return "diverges";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "";
}

SeriesVerdict series_SL(const MeasureParams& mu, int k, int n, const SeriesOptions& opts) {
  tri(k, n);
  SeriesVerdict v;

  if (mu.kind() == FamilyKind::Geometric) {
    const double log_s = std::log(mu.s());
    const double lq = (k - n) * log_s;
    KahanAccumulator acc;
    for (int i = 1; i <= opts.max_terms; ++i) {
      acc.add(std::exp(lq * (n + i)));
      v.partial_sums.push_back(acc.value());
    }
    v.limit = std::exp(log_SL_geometric(log_s, k, n));
    set_tail(v, lq * (n + opts.max_terms + 1) - std::log1p(-std::exp(lq)));
    v.verdict = Verdict::Converges;
    v.method = "geometric ratio q = s^{k-n} < 1; closed-form limit and tail";
    return v;
  }

  int terms = opts.max_terms;
  const int horizon = mu.horizon();
  bool truncated_by_table = false;
  if (horizon != std::numeric_limits<int>::max()) {
    terms = std::min(terms, std::max(0, horizon - n));
    if (terms < opts.max_terms) {
      truncated_by_table = true;
      v.flags.push_back("finite weight table truncates the series at m = " + std::to_string(horizon));
    }
  }

  KahanAccumulator acc;
  double first_term = -1.0;
  double prev_term = -1.0;
  bool nondecreasing = true;
  for (int i = 1; i <= terms; ++i) {
    const int m = n + i;
    const double term = std::exp(mu.log_b(k, m) - mu.log_b(n, m));
    acc.add(term);
    v.partial_sums.push_back(acc.value());
    if (first_term < 0.0) first_term = term;
    if (prev_term >= 0.0 && term < prev_term * (1.0 - 1e-12)) nondecreasing = false;
    prev_term = term;
    if (acc.value() > opts.threshold) {
      v.verdict = Verdict::Diverges;
      v.witness_index = m;
      v.method = "partial sum crossed threshold " + std::to_string(opts.threshold);
      return v;
    }
  }

  if (!truncated_by_table && terms > 0 && nondecreasing && first_term > 0.0) {
    v.verdict = Verdict::Diverges;
    v.method = "terms bounded below by the first term (observed ratios >= 1), so they do not tend to 0";
    return v;
  }
  v.verdict = Verdict::Inconclusive;
  v.method = "no tail bound available for this family";
  return v;
}

SeriesVerdict series_E(const MeasureParams& mu, int max_index, const SeriesOptions& opts) {
  SeriesVerdict v;
  if (max_index < 2) throw std::invalid_argument("series_E requires max_index >= 2");

  if (mu.kind() == FamilyKind::Geometric) {
    const double s = mu.s();
    const double log_s = std::log(s);
    KahanAccumulator acc;
    for (int n = 2; n <= max_index; ++n) {
      for (int k = 1; k < n; ++k) {
        acc.add(std::exp(log_SL_geometric(log_s, k, n) - mu.log_b(k, n)));
        v.partial_sums.push_back(acc.value());
      }
    }
    v.limit = acc.value();
    // Row bound: sum_k S^L_kn / b_kn <= s^{-n^2} * s/(s-1)^2; geometric tail
    // over rows n > max_index.
    const double W1 = static_cast<double>(max_index) + 1.0;
    const double log_tail = log_s - 2.0 * std::log(s - 1.0) - W1 * W1 * log_s -
                            std::log1p(-std::exp(-(2.0 * max_index + 3.0) * log_s));
    set_tail(v, log_tail);
    v.verdict = Verdict::Converges;
    v.method = "closed-form inner sums; quadratic-exponent row bound for the tail";
    return v;
  }

  const int horizon = mu.horizon();
  KahanAccumulator acc;
  bool any_inconclusive = false;
  for (int n = 2; n <= max_index && n <= horizon; ++n) {
    for (int k = 1; k < n; ++k) {
      const SeriesVerdict inner = series_SL(mu, k, n, opts);
      if (inner.verdict == Verdict::Diverges) {
        v.verdict = Verdict::Diverges;
        v.method = "inner S^L" + pos(k, n) + " diverges, so E(b) diverges";
        v.flags.push_back("divergent inner S^L at " + pos(k, n));
        return v;
      }
      if (inner.verdict == Verdict::Inconclusive) {
        any_inconclusive = true;
        v.flags.push_back("inner S^L" + pos(k, n) + " inconclusive; partial sum used");
      }
      acc.add(inner.estimate() / mu.b(k, n));
      v.partial_sums.push_back(acc.value());
    }
  }
  v.verdict = Verdict::Inconclusive;
  v.method = any_inconclusive ? "inner sums carry no tail bounds"
                              : "no tail bound available for this family";
  return v;
}

SeriesVerdict series_SRL(const MeasureParams& mu, int k, int n, const SeriesOptions& opts) {
  tri(k, n);
  SeriesVerdict v;

  if (mu.kind() == FamilyKind::Geometric) {
    const double log_s = std::log(mu.s());
    KahanAccumulator acc;
    bool ratios_above_one = true;
    double prev_log_term = 0.0;
    for (int i = 1; i <= opts.max_terms; ++i) {
      const int m = n + i;
      const double log_term = mu.log_b(k, m) - log_SL_geometric(log_s, n, m);
      if (i > 1 && log_term <= prev_log_term) ratios_above_one = false;
      prev_log_term = log_term;
      acc.add(std::exp(log_term));
      v.partial_sums.push_back(acc.value());
      if (acc.value() > opts.threshold) {
        v.verdict = Verdict::Diverges;
        v.witness_index = m;
        v.method = "partial sum crossed threshold " + std::to_string(opts.threshold);
        return v;
      }
    }
    if (ratios_above_one && !v.partial_sums.empty()) {
      v.verdict = Verdict::Diverges;
      v.method = "terms strictly increasing (log-ratio > 0), so they do not tend to 0";
      return v;
    }
    v.verdict = Verdict::Inconclusive;
    v.method = "threshold not crossed within max_terms";
    return v;
  }

  const int horizon = mu.horizon();
  KahanAccumulator acc;
  bool any_dropped = false;
  for (int i = 1; i <= opts.max_terms; ++i) {
    const int m = n + i;
    if (m > horizon) break;
    const SeriesVerdict inner = series_SL(mu, n, m, opts);
    double term = 0.0;
    if (inner.verdict == Verdict::Diverges) {
      any_dropped = true;
      v.flags.push_back("inner S^L" + pos(n, m) + " diverges; term set to 0");
    } else {
      if (inner.verdict == Verdict::Inconclusive)
        v.flags.push_back("inner S^L" + pos(n, m) + " inconclusive; partial sum used");
      const double denom = inner.estimate();
      if (denom > 0.0) term = mu.b(k, m) / denom;
    }
    acc.add(term);
    v.partial_sums.push_back(acc.value());
    if (acc.value() > opts.threshold) {
      v.verdict = Verdict::Diverges;
      v.witness_index = m;
      v.method = "partial sum crossed threshold " + std::to_string(opts.threshold);
      return v;
    }
  }
  v.verdict = Verdict::Inconclusive;
  v.method = any_dropped ? "all or part of the series dropped via divergent inner sums"
                         : "threshold not crossed within max_terms";
  return v;
}

RegimeReport classify(const MeasureParams& mu, int window, const SeriesOptions& opts) {
  if (window < 2) throw std::invalid_argument("classify requires window >= 2");
  RegimeReport report;

  bool all_SL_diverge = true;
  bool all_SL_converge = true;
  for (int n = 2; n <= window; ++n) {
    for (int k = 1; k < n; ++k) {
      SeriesVerdict v = series_SL(mu, k, n, opts);
      if (v.verdict != Verdict::Diverges) all_SL_diverge = false;
      if (v.verdict != Verdict::Converges) all_SL_converge = false;
      report.SL.emplace(TriangularIndex{k, n}, std::move(v));
    }
  }

  if (all_SL_diverge) {
    report.regime = "type I_infinity regime (irreducible right regular representation)";
    report.E.verdict = Verdict::Diverges;
    report.E.method = "every S^L_kn diverges, so E(b) diverges term by term";
    return report;
  }

  report.E = series_E(mu, window, opts);
  bool all_SRL_diverge = true;
  for (int n = 2; n <= window; ++n) {
    for (int k = 1; k < n; ++k) {
      SeriesVerdict v = series_SRL(mu, k, n, opts);
      if (v.verdict != Verdict::Diverges) all_SRL_diverge = false;
      for (const auto& f : v.flags) report.flags.push_back("S^{R,L}" + pos(k, n) + ": " + f);
      report.SRL.emplace(TriangularIndex{k, n}, std::move(v));
    }
  }
  for (const auto& f : report.E.flags) report.flags.push_back("E(b): " + f);

  if (all_SL_converge && report.E.verdict == Verdict::Converges && all_SRL_diverge)
    report.regime = "type III_1 factor regime";
  else
    report.regime = "mixed/inconclusive";
  return report;
}

}  // namespace unimod
