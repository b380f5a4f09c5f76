#include "qseries/qproducts.hpp"

#include <sstream>

#include "qseries/kernels.hpp"

namespace qseries {

void PochFactor::validate() const {
  if (sign != 1 && sign != -1) throw InvalidFactor("factor sign must be +1 or -1");
  if (modulus < 1) throw InvalidFactor("factor modulus must be positive");
  if (offset < 1) {
    throw InvalidFactor(sign > 0 ? "factor (1 - q^0) vanishes" : "factor (1 + q^0) = 2 is not a unit");
  }
}

std::map<std::tuple<int, std::int64_t, std::int64_t>, std::int64_t> QProduct::aggregate() const {
  std::map<std::tuple<int, std::int64_t, std::int64_t>, std::int64_t> out;
  for (const auto& f : factors) out[{f.sign, f.offset, f.modulus}] += f.power;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

QProduct QProduct::from_lists(const std::vector<std::pair<int, std::int64_t>>& numerator,
                              const std::vector<std::pair<int, std::int64_t>>& denominator, std::int64_t base) {
  QProduct p;
  for (const auto& [s, j] : numerator) p.factors.push_back({s, j, base, +1});
  for (const auto& [s, j] : denominator) p.factors.push_back({s, j, base, -1});
  return p;
}

std::string to_string(const QProduct& p) {
  std::ostringstream out;
  bool first = true;
  for (const auto& f : p.factors) {
    if (!first) out << " ";
    first = false;
    const auto qpow = [](std::int64_t e) { return e == 1 ? std::string("q") : "q^" + std::to_string(e); };
    out << "(" << (f.sign < 0 ? "-" : "") << qpow(f.offset) << ";" << qpow(f.modulus) << ")";
    if (f.power != 1) out << "^" << f.power;
  }
  if (first) out << "1";
  return out.str();
}

namespace {

// In place (sign*q^offset; q^modulus)^power on a dense block starting at q^0.
void apply_factor(std::vector<Integer>& c, const PochFactor& f) {
  const auto len = static_cast<std::int64_t>(c.size());
  for (std::int64_t step = f.offset; step < len; step += f.modulus) {
    kernels::apply_binomial(c, step, f.sign, f.power);
  }
}

std::vector<Integer> unit_block(Exponent order) {
  std::vector<Integer> c(static_cast<std::size_t>(std::max<Exponent>(order, 0)));
  if (!c.empty()) c[0] = 1;
  return c;
}

// sum_{n>=0} q^{n^2 + extra*n} / (q;q)_n
Series rogers_ramanujan_sum(std::int64_t extra, Exponent order) {
  std::vector<Integer> sum(static_cast<std::size_t>(order));
  auto partial = unit_block(order);  // 1/(q;q)_n, updated in place
  for (std::int64_t n = 0;; ++n) {
    const std::int64_t lead = n * n + extra * n;
    if (lead >= order) break;
    for (std::int64_t e = lead; e < order; ++e) sum[e] += partial[e - lead];
    kernels::apply_binomial(partial, n + 1, +1, -1);
  }
  return Series::from_dense(0, std::move(sum), order);
}

}  // namespace

Series poch_expand(const PochFactor& f, Exponent order) {
  f.validate();
  auto c = unit_block(order);
  apply_factor(c, f);
  return Series::from_dense(0, std::move(c), order);
}

Series product_expand(const QProduct& p, Exponent order) {
  for (const auto& f : p.factors) f.validate();
  auto c = unit_block(order);
  for (const auto& f : p.factors) apply_factor(c, f);
  return Series::from_dense(0, std::move(c), order);
}

Series euler(std::int64_t m, Exponent order) { return poch_expand({+1, m, m, 1}, order); }

namespace {

// In place (1 - q^step)^power through the binomial series, for powers too
// large to apply one factor at a time.
void apply_binomial_series(std::vector<Integer>& c, std::int64_t step, std::int64_t power) {
  const auto len = static_cast<std::int64_t>(c.size());
  std::vector<Integer> binom{1};
  for (std::int64_t k = 1; k * step < len; ++k) {
    Integer next = binom.back() * (power - k + 1);
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(k));
    binom.push_back(std::move(next));
  }
  for (std::size_t k = 1; k < binom.size(); k += 2) binom[k] = -binom[k];
  Integer acc;
  for (std::int64_t e = len - 1; e >= step; --e) {
    acc = c[e];
    for (std::int64_t k = 1; k * step <= e; ++k) {
      mpz_addmul(acc.get_mpz_t(), binom[k].get_mpz_t(), c[e - k * step].get_mpz_t());
    }
    c[e] = acc;
  }
}

}  // namespace

Series eta_expand(const std::vector<std::int64_t>& exponents, Exponent order) {
  auto c = unit_block(order);
  for (std::size_t n = 1; n < exponents.size(); ++n) {
    const std::int64_t a = exponents[n];
    if (a == 0) continue;
    if (a >= -4 && a <= 4) kernels::apply_binomial(c, static_cast<std::int64_t>(n), +1, a);
    else apply_binomial_series(c, static_cast<std::int64_t>(n), a);
  }
  return Series::from_dense(0, std::move(c), order);
}

Series G_product(Exponent order) {
  return product_expand({{{+1, 1, 5, -1}, {+1, 4, 5, -1}}}, order);
}

Series H_product(Exponent order) {
  return product_expand({{{+1, 2, 5, -1}, {+1, 3, 5, -1}}}, order);
}

Series G_sum(Exponent order) { return rogers_ramanujan_sum(0, order); }
Series H_sum(Exponent order) { return rogers_ramanujan_sum(1, order); }

Series R(Exponent order) { return divide(H_product(order), G_product(order)); }
Series R_inv(Exponent order) { return divide(G_product(order), H_product(order)); }

Series phi(int sign, Exponent order) {
  std::vector<Integer> c(static_cast<std::size_t>(order));
  if (order > 0) c[0] = 1;
  for (std::int64_t n = 1; n * n < order; ++n) c[n * n] += (sign < 0 && n % 2 != 0) ? -2 : 2;
  return Series::from_dense(0, std::move(c), order);
}

Series phi_product(int sign, Exponent order) {
  const Series p = product_expand({{{+1, 2, 2, 5}, {+1, 1, 1, -2}, {+1, 4, 4, -2}}}, order);
  return sign < 0 ? negate_variable(p) : p;
}

Series psi(Exponent order) {
  std::vector<Integer> c(static_cast<std::size_t>(order));
  for (std::int64_t n = 0; n * (n + 1) / 2 < order; ++n) c[n * (n + 1) / 2] += 1;
  return Series::from_dense(0, std::move(c), order);
}

Series psi_product(Exponent order) {
  return product_expand({{{+1, 2, 2, 2}, {+1, 1, 1, -1}}}, order);
}

Series ramanujan_k(Exponent order) {
  // q * R(q) * R(q^2)^2 needs R(q) below q^{order-1} and R(q^2) below q^{order-1}.
  const Exponent inner = std::max<Exponent>(order - 1, 1);
  const Series r2 = substitute_power(R((inner + 1) / 2), 2).truncated(inner);
  return shift(R(inner) * r2 * r2, 1);
}

}  // namespace qseries
