#include "qseries/prodmake.hpp"

#include <algorithm>

#include "qseries/dissection.hpp"

namespace qseries {

NonIntegralExponent::NonIntegralExponent(std::int64_t n_)
    : SeriesError("no integral product exponent at n = " + std::to_string(n_)), n(n_) {}

ExponentOverflow::ExponentOverflow(std::int64_t n_)
    : SeriesError("product exponent at n = " + std::to_string(n_) + " exceeds 64 bits"), n(n_) {}

EtaExponents prodmake(const Series& f, Exponent order) {
  if (f.is_zero() || f.valuation() != 0 || f.leading_coefficient() != 1) {
    throw NotUnit("prodmake needs valuation 0 and constant term 1");
  }
  const Exponent n_max = std::min(order, f.order());
  const Series g = f.truncated(n_max);
  const Series t = divide(-q_derivative(g), g);

  EtaExponents out;
  out.order = n_max;
  out.exponents.assign(static_cast<std::size_t>(std::max<Exponent>(n_max, 1)), 0);
  // divisor_sum[n] accumulates sum_{d | n, d < n} d * a_d as the a_d appear.
  std::vector<Integer> divisor_sum(out.exponents.size());
  Integer num;
  for (Exponent n = 1; n < n_max; ++n) {
    num = t.coefficient(n) - divisor_sum[n];
    if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(n))) throw NonIntegralExponent(n);
    mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(n));
    if (!num.fits_slong_p()) throw ExponentOverflow(n);
    const std::int64_t a = num.get_si();
    out.exponents[n] = a;
    if (a == 0) continue;
    const Integer contribution = Integer(a) * n;
    for (Exponent k = 2 * n; k < n_max; k += n) divisor_sum[k] += contribution;
  }

  if (eta_expand(out.exponents, n_max) != g) {
    throw SeriesError("prodmake: re-expanded product does not reproduce the input");
  }
  return out;
}

std::optional<PeriodView> detect_period(const EtaExponents& e, std::int64_t modulus) {
  if (modulus < 1) throw SeriesError("period must be positive");
  if (e.order < 3 * modulus) {
    throw SeriesError("period detection with M = " + std::to_string(modulus) + " needs order >= " +
                      std::to_string(3 * modulus));
  }
  PeriodView view;
  view.modulus = modulus;
  view.pattern.assign(static_cast<std::size_t>(modulus), 0);
  for (std::int64_t n = modulus; n < 2 * modulus; ++n) view.pattern[n % modulus] = e.exponents[n];
  for (std::int64_t n = 2 * modulus; n < e.order; ++n) {
    if (e.exponents[n] != view.pattern[n % modulus]) return std::nullopt;
  }
  for (std::int64_t n = 1; n < modulus; ++n) {
    if (e.exponents[n] != view.pattern[n]) view.leading_exceptions.emplace_back(n, e.exponents[n]);
  }
  return view;
}

QProduct to_qproduct(const PeriodView& view) {
  QProduct p;
  for (std::int64_t r = 0; r < view.modulus; ++r) {
    if (view.pattern[r] != 0) p.factors.push_back({+1, r == 0 ? view.modulus : r, view.modulus, view.pattern[r]});
  }
  std::sort(p.factors.begin(), p.factors.end(),
            [](const PochFactor& a, const PochFactor& b) { return a.offset < b.offset; });
  return p;
}

QProduct signed_grouping(const PeriodView& view, std::int64_t base) {
  if (base % 2 == 0 || view.modulus != 2 * base) {
    throw SeriesError("signed grouping needs an odd base M and a period-2M pattern");
  }
  const auto& a = view.pattern;
  const std::int64_t period = 2 * base;
  QProduct p;
  for (std::int64_t j = 1; j <= base; ++j) {
    const std::int64_t minus = a[(2 * j) % period] - a[(2 * j + base) % period];
    const std::int64_t odd_residue = (j % 2 != 0) ? j % period : (j + base) % period;
    const std::int64_t plus = a[odd_residue] + minus;
    if (minus != 0) p.factors.push_back({-1, j, base, minus});
    if (plus != 0) p.factors.push_back({+1, j, base, plus});
  }
  return p;
}

std::optional<QProduct> detect_signed_product(const EtaExponents& e, std::int64_t base) {
  const auto view = detect_period(e, 2 * base);
  if (!view || !view->leading_exceptions.empty()) return std::nullopt;
  return signed_grouping(*view, base);
}

std::vector<TermGuess> conjecture_dissection(const Series& f, std::int64_t m, std::int64_t period,
                                             bool signed_base) {
  const Dissection d = dissect(f, m);
  std::vector<TermGuess> out;
  for (std::int64_t l = 0; l < m; ++l) {
    const Series& slice = d.slices[l];
    TermGuess g;
    g.residue = l;
    if (slice.is_zero()) {
      g.vanishes = true;
      out.push_back(std::move(g));
      continue;
    }
    const Exponent v = slice.valuation();
    g.prefactor_exponent = m * v + l;
    g.scalar = slice.leading_coefficient();
    try {
      const Series normalized = divide(slice, Series::monomial(g.scalar, v, slice.order()));
      const Series term = substitute_power(normalized, m);
      g.exponents = prodmake(term, term.order());
      if (signed_base) {
        g.product = detect_signed_product(g.exponents, period);
        g.exponents.period_view = detect_period(g.exponents, 2 * period);
      } else {
        g.exponents.period_view = detect_period(g.exponents, period);
        if (g.exponents.period_view && g.exponents.period_view->leading_exceptions.empty()) {
          g.product = to_qproduct(*g.exponents.period_view);
        }
      }
    } catch (const SeriesError&) {
      g.product.reset();
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace qseries
