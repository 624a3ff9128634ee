#include "unimod/lemmas.hpp"

#include <stdexcept>

#include "unimod/matrix.hpp"

namespace unimod {

namespace {

std::string pos(int k, int n) { return "(" + std::to_string(k) + "," + std::to_string(n) + ")"; }

Polynomial inverse_or_one(int k, int n) {
  if (k == n) return Polynomial{Rational(1)};
  return inverse_coordinate_recursive(k, n);
}

/// d/dt p(x * E_kn(t)) at t = 0, the oracle the generator convention is
/// resolved against.
Polynomial right_translation_derivative(const Polynomial& p, int k, int n, int N) {
  const Variable t = Variable::parameter("t");
  const auto g = elementary<Polynomial>(N, k, n, Polynomial::variable(t));
  return substitute_right(p, g).derivative(t).substitute(t, Polynomial{});
}

}  // namespace

LemmaReport check_inverse_formulas(int N) {
  LemmaReport report;
  report.id = "inverse-formulas-N" + std::to_string(N);

  const auto x = symbolic_matrix(N);
  const auto xinv_oracle = invert(x);

  for (int k = 1; k < N; ++k) {
    for (int n = k + 1; n <= N; ++n) {
      const Polynomial rec = inverse_coordinate_recursive(k, n);
      const Polynomial closed = inverse_coordinate_closed(k, n);
      const Polynomial oracle = xinv_oracle.entry(k, n);
      report.add("recursive-vs-oracle" + pos(k, n),
                 "x_kn^{-1} recursion equals back-substitution entry", rec == oracle);
      report.add("closed-vs-oracle" + pos(k, n),
                 "chain expansion equals back-substitution entry", closed == oracle);

      bool local = true;
      for (const auto& v : rec.variables()) {
        const auto idx = v.index();
        if (!(k <= idx.k && idx.k < idx.n && idx.n <= n)) local = false;
      }
      report.add("locality" + pos(k, n),
                 "x_kn^{-1} depends only on x_rs with k <= r < s <= n", local);
    }
  }

  for (int k = 1; k <= N; ++k) {
    for (int n = k; n <= N; ++n) {
      const Polynomial expected = k == n ? Polynomial{Rational(1)} : Polynomial{};
      Polynomial left, right;
      for (int r = k; r <= n; ++r) {
        left += x.entry(k, r) * inverse_or_one(r, n);
        right += inverse_or_one(k, r) * x.entry(r, n);
      }
      report.add("delta-left" + pos(k, n), "sum_r x_kr x_rn^{-1} = delta_kn", left == expected);
      report.add("delta-right" + pos(k, n), "sum_r x_kr^{-1} x_rn = delta_kn", right == expected);
    }
  }

  const auto id = UnipotentMatrix<Polynomial>::identity(N);
  report.add("matrix-right-inverse", "X * X^{-1} = 1", multiply(x, xinv_oracle) == id);
  report.add("matrix-left-inverse", "X^{-1} * X = 1", multiply(xinv_oracle, x) == id);
  return report;
}

LemmaReport check_partial_inverse_bracket(int N) {
  LemmaReport report;
  report.id = "partial-inverse-bracket-N" + std::to_string(N);

  for (int k = 1; k < N; ++k) {
    for (int n = k + 1; n <= N; ++n) {
      const Polynomial xinv = inverse_coordinate_recursive(k, n);
      for (int p = 1; p < N; ++p) {
        for (int q = p + 1; q <= N; ++q) {
          const Polynomial actual = xinv.derivative(Variable::coordinate(p, q));
          Polynomial expected;
          if (k <= p && q <= n) expected = -(inverse_or_one(k, p) * inverse_or_one(q, n));
          report.add("D" + pos(p, q) + "-on" + pos(k, n),
                     "[D_pq, x_kn^{-1}] = -x_kp^{-1} x_qn^{-1} inside the block, else 0",
                     actual == expected);
        }
      }
    }
  }
  return report;
}

LemmaReport check_superdiagonal_w_bracket(int N) {
  LemmaReport report;
  report.id = "superdiagonal-w-bracket-N" + std::to_string(N);

  for (int m = 1; m < N; ++m) {
    const DiffOperator a = right_generator(m, m + 1, N);
    for (int k = 1; k < N; ++k) {
      for (int n = k + 1; n <= N; ++n) {
        const Polynomial actual = a.apply(w_poly(k, n));
        Polynomial expected;
        std::string which;
        if (k == m && n == m + 1) {
          which = "hole (w_mm+1 = 0)";
        } else if (n <= m) {
          which = "k<n<=m: 0";
        } else if (n == m + 1 && k <= m - 1) {
          expected = Rational(2) * (coord(k, m) * coord(k, m + 1));
          which = "n=m+1: 2 x_km x_km+1";
        } else if (k <= m - 1 && n > m + 1) {
          which = "k<m<m+1<n: 0";
        } else if (k == m && n >= m + 2) {
          expected = Rational(2) * (inverse_or_one(m, n) * inverse_or_one(m + 1, n));
          which = "k=m: 2 x_mn^{-1} x_m+1n^{-1}";
        } else {
          which = "m+1<=k: 0";
        }
        report.add("m" + std::to_string(m) + "-w" + pos(k, n),
                   "[A^R_mm+1, w_kn], case " + which, actual == expected);
      }
    }
  }
  return report;
}

Polynomial log_delta_bracket(int m, int N) {
  return right_generator(m, m + 1, N).apply(ln_delta_poly(N));
}

Polynomial log_delta_bracket_expected(int m, int N) {
  Polynomial out;
  for (int r = 1; r < m; ++r)
    out += Rational(2) * (weight(r, m + 1) * coord(r, m) * coord(r, m + 1));
  for (int n = m + 2; n <= N; ++n)
    out += Rational(2) *
           (weight(m, n) * inverse_coordinate_recursive(m, n) * inverse_coordinate_recursive(m + 1, n));
  return out;
}

LemmaReport check_log_delta_bracket(int N) {
  LemmaReport report;
  report.id = "log-delta-bracket-N" + std::to_string(N);

  const Polynomial L = ln_delta_poly(N);
  for (int m = 1; m < N; ++m) {
    const Polynomial actual = log_delta_bracket(m, N);
    report.add("m" + std::to_string(m) + "-closed-form",
               "[A^R_mm+1, L_N] = 2 sum_r b_rm+1 x_rm x_rm+1 + 2 sum_n b_mn x_mn^{-1} x_m+1n^{-1}",
               actual == log_delta_bracket_expected(m, N));
    report.add("m" + std::to_string(m) + "-translation-derivative",
               "[A^R_mm+1, L_N] = d/dt L_N(x E_mm+1(t)) at t=0",
               actual == right_translation_derivative(L, m, m + 1, N));
  }
  return report;
}

LemmaReport check_translated_w(int N) {
  LemmaReport report;
  report.id = "translated-w-N" + std::to_string(N);

  const Polynomial t = param("t");
  for (int m = 1; m < N; ++m) {
    const auto g = elementary<Polynomial>(N, m, m + 1, t);
    for (int k = 1; k < N; ++k) {
      for (int n = k + 1; n <= N; ++n) {
        const Polynomial actual = substitute_right(w_poly(k, n), g) - w_poly(k, n);
        Polynomial expected;
        std::string which;
        if (k == m && n == m + 1) {
          which = "hole (w_mm+1 = 0)";
        } else if (n == m + 1 && k <= m - 1) {
          expected = Rational(2) * (t * coord(k, m) * coord(k, m + 1)) + t * t * coord(k, m) * coord(k, m);
          which = "n=m+1: 2t x_km x_km+1 + t^2 x_km^2";
        } else if (k == m && n >= m + 2) {
          const Polynomial a = inverse_coordinate_recursive(m, n);
          const Polynomial b = inverse_coordinate_recursive(m + 1, n);
          expected = Rational(2) * (t * a * b) - t * t * b * b;
          which = "k=m: 2t x_mn^{-1} x_m+1n^{-1} - t^2 (x_m+1n^{-1})^2";
        } else {
          which = "untouched rows and columns: 0";
        }
        report.add("m" + std::to_string(m) + "-w" + pos(k, n),
                   "w_kn(x E_mm+1(t)) - w_kn(x), case " + which, actual == expected);
      }
    }
  }

  bool t2_resolved = false;
  if (N >= 3) {
    const auto g = elementary<Polynomial>(N, 2, 3, t);
    const Polynomial diff = substitute_right(w_poly(1, 3), g) - w_poly(1, 3);
    const Polynomial resolved =
        Rational(2) * (t * coord(1, 2) * coord(1, 3)) + t * t * coord(1, 2) * coord(1, 2);
    const Polynomial transposed =
        Rational(2) * (t * coord(1, 2) * coord(1, 3)) + t * t * coord(1, 3) * coord(1, 3);
    t2_resolved = diff == resolved && diff != transposed;
    report.add("t2-coefficient-resolution",
               "quadratic term of the n=m+1 shift is t^2 x_km^2, not t^2 x_km+1^2", t2_resolved);
  }
  return report;
}

namespace {

bool reduce_bracket(const Polynomial& bracket, const std::set<TriangularIndex>& known,
                    LadderEntry& entry, std::string& err) {
  Polynomial remainder;
  for (const auto& [mono, c] : bracket.terms()) {
    bool all_known = true;
    for (const auto& [v, e] : mono.factors())
      if (v.is_coordinate() && !known.contains(v.index())) all_known = false;
    if (!all_known) remainder.add_term(mono, c);
  }
  entry.remainder = remainder;

  if (remainder.term_count() != 1) {
    err = "remainder has " + std::to_string(remainder.term_count()) + " terms, expected 1";
    return false;
  }
  const auto& [mono, c] = *remainder.terms().begin();
  if (!(c == 2 || c == -2)) {
    err = "remainder coefficient " + rat_str(c) + ", expected +-2";
    return false;
  }
  int coords = 0, weights = 0;
  TriangularIndex coord_idx{}, weight_idx{};
  for (const auto& [v, e] : mono.factors()) {
    if (v.is_coordinate() && e == 1) {
      ++coords;
      coord_idx = v.index();
    } else if (v.is_weight() && e == 1) {
      ++weights;
      weight_idx = v.index();
    } else {
      err = "unexpected factor " + v.name() + "^" + std::to_string(e);
      return false;
    }
  }
  if (coords != 1 || weights != 1) {
    err = "remainder is not of the form (+-2) b * x";
    return false;
  }
  if (known.contains(coord_idx)) {
    err = "remainder coordinate was already extracted";
    return false;
  }
  entry.coordinate = coord_idx;
  entry.prefactor_scalar = c;
  entry.prefactor_weight = weight_idx;
  return true;
}

}  // namespace

LadderResult ladder(int N) {
  LadderResult result;
  result.checks.id = "ladder-N" + std::to_string(N);
  if (N < 2) throw std::invalid_argument("ladder requires N >= 2");

  const Polynomial L = ln_delta_poly(N);
  std::set<TriangularIndex> known;

  for (int m = 2; m <= N - 1; ++m) {
    const std::string base_src = "[A" + std::to_string(m) + std::to_string(m + 1) + ",L]";
    const Polynomial inner = right_generator(m, m + 1, N).apply(L);

    std::vector<Polynomial> chain{inner};
    std::vector<std::string> chain_src{base_src};
    for (int s = 1; s <= m - 1; ++s) {
      const int a = m - s;
      chain.push_back(right_generator(a, a + 1, N).apply(chain.back()));
      chain_src.push_back("[A" + std::to_string(a) + std::to_string(a + 1) + "," + chain_src.back() + "]");
    }
    const Polynomial special = right_generator(m - 1, m + 1, N).apply(inner);
    const std::string special_src =
        "[A" + std::to_string(m - 1) + std::to_string(m + 1) + "," + base_src + "]";

    struct Step {
      const Polynomial* bracket;
      const std::string* src;
    };
    std::vector<Step> steps;
    if (m == 2) {
      steps.push_back({&special, &special_src});
      steps.push_back({&chain[1], &chain_src[1]});
    } else if (m == 3) {
      steps.push_back({&chain[2], &chain_src[2]});
      steps.push_back({&chain[1], &chain_src[1]});
      steps.push_back({&special, &special_src});
    } else {
      for (int s = m - 1; s >= 2; --s) steps.push_back({&chain[s], &chain_src[s]});
      steps.push_back({&special, &special_src});
      steps.push_back({&chain[1], &chain_src[1]});
    }

    for (const auto& step : steps) {
      LadderEntry entry;
      entry.stage = m;
      entry.source = *step.src;
      entry.bracket = *step.bracket;
      std::string err;
      const bool ok = reduce_bracket(*step.bracket, known, entry, err);
      result.checks.add("stage" + std::to_string(m) + "-" + *step.src,
                        "reduction leaves a single new coordinate with prefactor +-2 b", ok, err);
      if (ok) {
        known.insert(entry.coordinate);
        result.entries.push_back(entry);
      }
    }
  }

  std::set<TriangularIndex> expected;
  for (int k = 1; k < N; ++k)
    for (int n = k + 1; n <= N; ++n)
      if (!(k == N - 1 && n == N)) expected.insert(TriangularIndex{k, n});
  result.checks.add("coverage", "every x_kn with k < n <= N except x_{N-1,N} is extracted",
                    known == expected);
  return result;
}

std::vector<ConventionRecord> resolved_conventions() {
  std::vector<ConventionRecord> out;

  {
    ConventionRecord rec;
    rec.id = "generator-coefficient-index";
    const int N = 4;
    const Polynomial probe = coord(1, 4);
    const Polynomial oracle = right_translation_derivative(probe, 2, 4, N);
    const Polynomial candidate = right_generator(2, 4, N).apply(probe);
    const Polynomial transposed = DiffOperator::partial(2, 4).apply(probe);
    rec.verified = oracle == candidate && candidate == coord(1, 2) && oracle != transposed;
    rec.resolved = "A^R_kn = sum_{r<k} x_rk D_rn + D_kn (coefficient x_rk)";
    rec.note =
        "resolved by d/dt p(x E_kn(t)) at t=0: right translation adds t x_rk to x_rn; "
        "the transposed reading x_kr names sub-diagonal entries and drops these terms";
    out.push_back(rec);
  }

  {
    ConventionRecord rec;
    rec.id = "log-delta-bracket-sign";
    const int N = 3;
    const Polynomial L = ln_delta_poly(N);
    const Polynomial nested =
        right_generator(1, 3, N).apply(right_generator(2, 3, N).apply(L));
    rec.verified = nested == Rational(2) * (weight(1, 3) * coord(1, 2));
    rec.resolved = "global sign -1: identities hold with + for L_N = sum b_kn w_kn = -ln Delta";
    rec.note =
        "[A^R_13,[A^R_23, L_3]] = +2 b_13 x_12; substituting ln Delta = -L_3 negates every "
        "nested bracket once, so displays quoted for ln Delta differ by exactly one global sign";
    out.push_back(rec);
  }

  {
    ConventionRecord rec;
    rec.id = "translation-quadratic-coefficient";
    const int N = 3;
    const Polynomial t = param("t");
    const auto g = elementary<Polynomial>(N, 2, 3, t);
    const Polynomial diff = substitute_right(w_poly(1, 3), g) - w_poly(1, 3);
    const Polynomial resolved =
        Rational(2) * (t * coord(1, 2) * coord(1, 3)) + t * t * coord(1, 2) * coord(1, 2);
    const Polynomial transposed =
        Rational(2) * (t * coord(1, 2) * coord(1, 3)) + t * t * coord(1, 3) * coord(1, 3);
    rec.verified = diff == resolved && diff != transposed;
    rec.resolved = "w_km+1(x E_mm+1(t)) - w_km+1(x) = 2t x_km x_km+1 + t^2 x_km^2";
    rec.note =
        "the quadratic coefficient is x_km^2; the x_km+1^2 variant fails direct expansion "
        "while the resolved form matches it for every admissible (k,m)";
    out.push_back(rec);
  }

  {
    ConventionRecord rec;
    rec.id = "inverse-chain-bounds";
    const auto oracle = invert(symbolic_matrix(3)).entry(1, 3);
    const Polynomial strict = inverse_coordinate_closed(1, 3);
    // Variant allowing i_1 = k, with the diagonal factor x_kk = 1.
    const Polynomial nonstrict = strict + coord(1, 3);
    rec.verified = strict == oracle && nonstrict != oracle;
    rec.resolved = "chain indices are strictly increasing and strictly between k and n";
    rec.note =
        "allowing i_1 = k (diagonal factor 1) adds duplicate chains and already fails the "
        "back-substitution oracle at (1,3); the strict reading agrees at every position";
    out.push_back(rec);
  }

  return out;
}

}  // namespace unimod
