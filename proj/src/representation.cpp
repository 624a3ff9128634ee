#include "unimod/representation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace unimod {

namespace {

const Complex kI{0.0, 1.0};

std::string pt_label(const Point& t) {
  return "g[" + std::to_string(t.size()) + "]";
}

}  // namespace

StateFunction constant_function(Complex c) {
  return StateFunction{"const", [c](const Point&) { return c; }};
}

StateFunction coordinate_function(int k, int n) {
  tri(k, n);
  const std::string label = Variable::coordinate(k, n).name();
  return StateFunction{label, [k, n](const Point& x) { return Complex(x.entry(k, n), 0.0); }};
}

std::vector<StateFunction> test_battery(int N) {
  if (N < 2) throw std::invalid_argument("test_battery requires N >= 2");
  std::vector<StateFunction> fs;
  fs.push_back(constant_function(Complex(1.0, 0.0)));
  fs.back().label = "1";
  fs.push_back(coordinate_function(1, 2));
  fs.push_back(N >= 3 ? coordinate_function(1, 3)
                      : StateFunction{"x12^2", [](const Point& x) {
                                        const double v = x.entry(1, 2);
                                        return Complex(v * v, 0.0);
                                      }});
  if (N >= 4) {
    fs.push_back(StateFunction{"x12*x34", [](const Point& x) {
                                 return Complex(x.entry(1, 2) * x.entry(3, 4), 0.0);
                               }});
  } else if (N >= 3) {
    fs.push_back(StateFunction{"x12*x23", [](const Point& x) {
                                 return Complex(x.entry(1, 2) * x.entry(2, 3), 0.0);
                               }});
  } else {
    fs.push_back(StateFunction{"x12^3", [](const Point& x) {
                                 const double v = x.entry(1, 2);
                                 return Complex(v * v * v, 0.0);
                               }});
  }
  const int a = N >= 3 ? 2 : 1;
  const int b = N >= 3 ? 3 : 2;
  fs.push_back(StateFunction{"exp(0.7i*x" + std::to_string(a) + std::to_string(b) + ")",
                             [a, b](const Point& x) { return std::exp(kI * 0.7 * x.entry(a, b)); }});
  return fs;
}

StateFunction apply_TR(const MeasureParams& mu, const Point& t, StateFunction f) {
  return StateFunction{"TR_" + pt_label(t) + "[" + f.label + "]",
                       [mu, t, f](const Point& x) {
                         return std::sqrt(rn_right(mu, x, t)) * f.eval(multiply(x, t));
                       }};
}

StateFunction apply_TL(const MeasureParams& mu, const Point& s, StateFunction f) {
  return StateFunction{"TL_" + pt_label(s) + "[" + f.label + "]",
                       [mu, s, f](const Point& x) {
                         return std::sqrt(rn_left(mu, x, s)) * f.eval(multiply(invert(s), x));
                       }};
}

StateFunction apply_J(const MeasureParams& mu, StateFunction f) {
  return StateFunction{"J[" + f.label + "]", [mu, f](const Point& x) {
                         const double half_log = -0.5 * log_delta_value(mu, x, x.size());
                         return std::exp(half_log) * std::conj(f.eval(invert(x)));
                       }};
}

StateFunction apply_delta_pow(const MeasureParams& mu, Complex sigma, StateFunction f) {
  return StateFunction{"Delta^sigma[" + f.label + "]", [mu, sigma, f](const Point& x) {
                         return std::exp(sigma * log_delta_value(mu, x, x.size())) * f.eval(x);
                       }};
}

StateFunction apply_S(const MeasureParams& mu, StateFunction f) {
  return StateFunction{"S[" + f.label + "]", [mu, f](const Point& x) {
                         return std::exp(-log_delta_value(mu, x, x.size())) *
                                std::conj(f.eval(invert(x)));
                       }};
}

StateFunction apply_S_star(const MeasureParams& mu, StateFunction f) {
  (void)mu;
  return StateFunction{"S*[" + f.label + "]",
                       [f](const Point& x) { return std::conj(f.eval(invert(x))); }};
}

StateFunction multiply_by(std::function<Complex(const Point&)> symbol, const std::string& symbol_label,
                          StateFunction f) {
  return StateFunction{"M_" + symbol_label + "[" + f.label + "]",
                       [symbol, f](const Point& x) { return symbol(x) * f.eval(x); }};
}

std::vector<Point> sample_points(const MeasureParams& mu, int N, int count, std::uint64_t seed) {
  GaussianStream stream(seed);
  std::vector<Point> points;
  points.reserve(count);
  for (int i = 0; i < count; ++i) points.push_back(sample(mu, N, stream));
  return points;
}

DeviationReport compare_pointwise(const std::string& id, const StateFunction& a,
                                  const StateFunction& b, const std::vector<Point>& points) {
  DeviationReport report;
  report.id = id;
  report.points = static_cast<int>(points.size());
  for (const auto& x : points) {
    const Complex va = a.eval(x);
    const Complex vb = b.eval(x);
    const double dev = std::abs(va - vb) / std::max(1.0, std::abs(vb));
    report.max_dev = std::max(report.max_dev, dev);
  }
  return report;
}

DeviationReport check_J_involution(const MeasureParams& mu, const StateFunction& f,
                                   const std::vector<Point>& points) {
  return compare_pointwise("J^2[" + f.label + "] = " + f.label, apply_J(mu, apply_J(mu, f)), f,
                           points);
}

DeviationReport check_JTJ(const MeasureParams& mu, const Point& t, const StateFunction& f,
                          const std::vector<Point>& points) {
  const StateFunction lhs = apply_J(mu, apply_TR(mu, t, apply_J(mu, f)));
  const StateFunction rhs = apply_TL(mu, t, f);
  return compare_pointwise("J TR_t J[" + f.label + "] = TL_t[" + f.label + "]", lhs, rhs, points);
}

std::vector<DeviationReport> check_S_factorization(const MeasureParams& mu, const StateFunction& f,
                                                   const std::vector<Point>& points) {
  std::vector<DeviationReport> out;
  out.push_back(compare_pointwise("S[" + f.label + "] = J Delta^{1/2}[" + f.label + "]",
                                  apply_S(mu, f),
                                  apply_J(mu, apply_delta_pow(mu, Complex(0.5, 0.0), f)), points));
  out.push_back(compare_pointwise("S* S[" + f.label + "] = Delta[" + f.label + "]",
                                  apply_S_star(mu, apply_S(mu, f)),
                                  apply_delta_pow(mu, Complex(1.0, 0.0), f), points));
  out.push_back(
      compare_pointwise("S S[" + f.label + "] = " + f.label, apply_S(mu, apply_S(mu, f)), f, points));
  return out;
}

DeviationReport check_conjugation_lemma(const MeasureParams& mu,
                                        const std::function<Complex(const Point&)>& symbol,
                                        const std::string& symbol_label, const Point& t,
                                        const StateFunction& f, const std::vector<Point>& points) {
  const StateFunction lhs =
      apply_TR(mu, t, multiply_by(symbol, symbol_label, apply_TR(mu, invert(t), f)));
  auto translated = [symbol, t](const Point& x) { return symbol(multiply(x, t)); };
  const StateFunction rhs = multiply_by(translated, symbol_label + "(.t)", f);
  return compare_pointwise("TR_t M_" + symbol_label + " TR_t^{-1} = M_" + symbol_label + "(.t)", lhs,
                           rhs, points);
}

DeviationReport check_TR_homomorphism(const MeasureParams& mu, const Point& t, const Point& u,
                                      const StateFunction& f, const std::vector<Point>& points) {
  const StateFunction lhs = apply_TR(mu, t, apply_TR(mu, u, f));
  const StateFunction rhs = apply_TR(mu, multiply(t, u), f);
  return compare_pointwise("TR_t TR_u = TR_{tu} on " + f.label, lhs, rhs, points);
}

DeviationReport check_TL_TR_commute(const MeasureParams& mu, const Point& s, const Point& t,
                                    const StateFunction& f, const std::vector<Point>& points) {
  const StateFunction lhs = apply_TL(mu, s, apply_TR(mu, t, f));
  const StateFunction rhs = apply_TR(mu, t, apply_TL(mu, s, f));
  return compare_pointwise("TL_s TR_t = TR_t TL_s on " + f.label, lhs, rhs, points);
}

double group_commutator_exponent(const MeasureParams& mu, int m, double t, const Point& x) {
  const int N = x.size();
  if (!(1 <= m && m + 1 <= N)) throw std::invalid_argument("commutator stage out of range");
  const auto xi = invert(x);
  double total = 0.0;
  for (int r = 1; r < m; ++r) {
    const double xrm = x.entry(r, m);
    total += mu.b(r, m + 1) * (2.0 * t * xrm * x.entry(r, m + 1) + t * t * xrm * xrm);
  }
  for (int n = m + 2; n <= N; ++n) {
    const double a = xi.entry(m, n);
    const double b = xi.entry(m + 1, n);
    total += mu.b(m, n) * (2.0 * t * a * b - t * t * b * b);
  }
  return total;
}

namespace {

StateFunction commutator_TR_delta_is(const MeasureParams& mu, const Point& e_plus,
                                     const Point& e_minus, double s, StateFunction f) {
  StateFunction g = apply_delta_pow(mu, -kI * s, std::move(f));
  g = apply_TR(mu, e_minus, std::move(g));
  g = apply_delta_pow(mu, kI * s, std::move(g));
  return apply_TR(mu, e_plus, std::move(g));
}

StateFunction inverse_commutator_TR_delta_is(const MeasureParams& mu, const Point& e_plus,
                                             const Point& e_minus, double s, StateFunction f) {
  StateFunction g = apply_TR(mu, e_minus, std::move(f));
  g = apply_delta_pow(mu, -kI * s, std::move(g));
  g = apply_TR(mu, e_plus, std::move(g));
  return apply_delta_pow(mu, kI * s, std::move(g));
}

}  // namespace

DeviationReport check_group_commutator(const MeasureParams& mu, int m, double t, double s,
                                       const StateFunction& f, const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("need at least one point");
  const int N = points.front().size();
  const auto e_plus = elementary<double>(N, m, m + 1, t);
  const auto e_minus = elementary<double>(N, m, m + 1, -t);

  const StateFunction lhs = commutator_TR_delta_is(mu, e_plus, e_minus, s, f);
  auto multiplier = [mu, m, t, s](const Point& x) {
    return std::exp(-kI * s * group_commutator_exponent(mu, m, t, x));
  };
  const StateFunction rhs = multiply_by(multiplier, "exp(-is[...])", f);
  return compare_pointwise("{TR_E" + std::to_string(m) + std::to_string(m + 1) +
                               "(t), Delta^{is}} = closed form on " + f.label,
                           lhs, rhs, points);
}

DeviationReport check_nested_commutator(const MeasureParams& mu, double t1, double t2, double s,
                                        const StateFunction& f, const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("need at least one point");
  const int N = points.front().size();
  if (N < 3) throw std::invalid_argument("nested commutator requires N >= 3");
  const auto e23_plus = elementary<double>(N, 2, 3, t1);
  const auto e23_minus = elementary<double>(N, 2, 3, -t1);
  const auto e13_plus = elementary<double>(N, 1, 3, t2);
  const auto e13_minus = elementary<double>(N, 1, 3, -t2);

  StateFunction g = inverse_commutator_TR_delta_is(mu, e23_plus, e23_minus, s, f);
  g = apply_TR(mu, e13_minus, std::move(g));
  g = commutator_TR_delta_is(mu, e23_plus, e23_minus, s, std::move(g));
  const StateFunction lhs = apply_TR(mu, e13_plus, std::move(g));

  const double b13 = mu.b(1, 3);
  auto multiplier = [b13, t1, t2, s](const Point& x) {
    return std::exp(-kI * s * (2.0 * b13 * t1 * t2 * x.entry(1, 2)));
  };
  const StateFunction rhs = multiply_by(multiplier, "exp(-2is b13 t1 t2 x12)", f);
  return compare_pointwise("{TR_E13(t2), {TR_E23(t1), Delta^{is}}} = exp(-2is b13 t1 t2 x12) on " +
                               f.label,
                           lhs, rhs, points);
}

McEstimate mc_inner(const MeasureParams& mu, const StateFunction& f, const StateFunction& g, int N,
                    int nsamples, std::uint64_t seed) {
  if (nsamples < 2) throw std::invalid_argument("mc_inner requires nsamples >= 2");
  GaussianStream stream(seed);
  double sum_re = 0.0, sum_im = 0.0, sum_re2 = 0.0, sum_im2 = 0.0;
  for (int i = 0; i < nsamples; ++i) {
    const Point x = sample(mu, N, stream);
    const Complex z = std::conj(f.eval(x)) * g.eval(x);
    sum_re += z.real();
    sum_im += z.imag();
    sum_re2 += z.real() * z.real();
    sum_im2 += z.imag() * z.imag();
  }
  const double n = nsamples;
  const double mean_re = sum_re / n;
  const double mean_im = sum_im / n;
  const double var_re = std::max(0.0, sum_re2 / n - mean_re * mean_re);
  const double var_im = std::max(0.0, sum_im2 / n - mean_im * mean_im);
  McEstimate est;
  est.value = Complex(mean_re, mean_im);
  est.std_error = std::sqrt((var_re + var_im) / (n - 1.0));
  est.n = nsamples;
  return est;
}

namespace {

StatCheck paired_difference(const std::string& id, const MeasureParams& mu, int N, int nsamples,
                            std::uint64_t seed,
                            const std::function<double(const Point&)>& diff) {
  GaussianStream stream(seed);
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < nsamples; ++i) {
    const Point x = sample(mu, N, stream);
    const double d = diff(x);
    sum += d;
    sum2 += d * d;
  }
  const double n = nsamples;
  const double mean = sum / n;
  const double var = std::max(0.0, sum2 / n - mean * mean);
  StatCheck check;
  check.id = id;
  check.estimate = mean;
  check.std_error = std::sqrt(var / (n - 1.0));
  check.n = nsamples;
  return check;
}

}  // namespace

StatCheck check_unitarity_TR(const MeasureParams& mu, const Point& t, const StateFunction& f, int N,
                             int nsamples, std::uint64_t seed) {
  const StateFunction tf = apply_TR(mu, t, f);
  return paired_difference("||TR_t " + f.label + "||^2 - ||" + f.label + "||^2", mu, N, nsamples,
                           seed, [&](const Point& x) {
                             return std::norm(tf.eval(x)) - std::norm(f.eval(x));
                           });
}

StatCheck check_unitarity_TL(const MeasureParams& mu, const Point& s, const StateFunction& f, int N,
                             int nsamples, std::uint64_t seed) {
  const StateFunction sf = apply_TL(mu, s, f);
  return paired_difference("||TL_s " + f.label + "||^2 - ||" + f.label + "||^2", mu, N, nsamples,
                           seed, [&](const Point& x) {
                             return std::norm(sf.eval(x)) - std::norm(f.eval(x));
                           });
}

StatCheck check_delta_is_isometry(const MeasureParams& mu, double s, const StateFunction& f,
                                  const StateFunction& g, int N, int nsamples, std::uint64_t seed) {
  const StateFunction df = apply_delta_pow(mu, kI * s, f);
  const StateFunction dg = apply_delta_pow(mu, kI * s, g);
  return paired_difference("<Delta^{is}" + f.label + ", Delta^{is}" + g.label + "> - <" + f.label +
                               ", " + g.label + ">",
                           mu, N, nsamples, seed, [&](const Point& x) {
                             const Complex a = std::conj(df.eval(x)) * dg.eval(x);
                             const Complex b = std::conj(f.eval(x)) * g.eval(x);
                             return std::abs(a - b);
                           });
}

HistogramSummary lnDelta_histogram(const MeasureParams& mu, int N, int nsamples,
                                   std::uint64_t seed) {
  if (nsamples < 1) throw std::invalid_argument("histogram requires nsamples >= 1");
  std::vector<double> values;
  values.reserve(nsamples);
  GaussianStream stream(seed);
  for (int i = 0; i < nsamples; ++i)
    values.push_back(log_delta_value(mu, sample(mu, N, stream), N));

  HistogramSummary h;
  h.nsamples = nsamples;
  h.min = *std::min_element(values.begin(), values.end());
  h.max = *std::max_element(values.begin(), values.end());
  double sum = 0.0, sum2 = 0.0;
  for (double v : values) {
    sum += v;
    sum2 += v * v;
  }
  h.mean = sum / nsamples;
  h.stddev = std::sqrt(std::max(0.0, sum2 / nsamples - h.mean * h.mean));

  const int nbins = 20;
  h.bins.assign(nbins, 0);
  h.bin_low = h.min;
  h.bin_width = (h.max - h.min) / nbins;
  for (double v : values) {
    int bin = h.bin_width > 0.0 ? static_cast<int>((v - h.min) / h.bin_width) : 0;
    bin = std::clamp(bin, 0, nbins - 1);
    ++h.bins[bin];
  }
  return h;
}

}  // namespace unimod
