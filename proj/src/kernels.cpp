#include "qseries/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include <omp.h>

namespace qseries::kernels {

namespace {

using i128 = __int128;

bool fits_int64(const Integer& x) { return mpz_fits_slong_p(x.get_mpz_t()) != 0; }

std::size_t max_bits(std::span<const Integer> v) {
  std::size_t bits = 0;
  for (const auto& x : v) {
    if (sgn(x) != 0) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
  }
  return bits;
}

std::vector<std::int64_t> to_machine(std::span<const Integer> v) {
  std::vector<std::int64_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_si();
  return out;
}

void assign_i128(Integer& dst, i128 value) {
  if (value >= INT64_MIN && value <= INT64_MAX) {
    dst = static_cast<long>(value);
    return;
  }
  const bool negative = value < 0;
  const unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(value)
                                         : static_cast<unsigned __int128>(value);
  const auto hi = static_cast<unsigned long>(mag >> 64);
  const auto lo = static_cast<unsigned long>(mag);
  mpz_set_ui(dst.get_mpz_t(), hi);
  mpz_mul_2exp(dst.get_mpz_t(), dst.get_mpz_t(), 64);
  mpz_add_ui(dst.get_mpz_t(), dst.get_mpz_t(), lo);
  if (negative) mpz_neg(dst.get_mpz_t(), dst.get_mpz_t());
}

// Below this many output coefficients threading costs more than it saves.
constexpr std::size_t kParallelThreshold = 96;

}  // namespace

void convolve(std::span<const Integer> a, std::span<const Integer> b, std::span<Integer> out) {
  const auto len = static_cast<std::int64_t>(out.size());
  if (len == 0) return;
  const auto as = a.first(out.size());
  const auto bs = b.first(out.size());

  const std::size_t ab = max_bits(as);
  const std::size_t bb = max_bits(bs);
  const std::size_t lb = std::bit_width(out.size());
  const bool parallel = out.size() >= kParallelThreshold;

  if (ab <= 63 && bb <= 63 && ab + bb + lb <= 126) {
    const auto am = to_machine(as);
    const auto bm = to_machine(bs);
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (std::int64_t n = 0; n < len; ++n) {
      i128 acc = 0;
      for (std::int64_t i = 0; i <= n; ++i) acc += static_cast<i128>(am[i]) * bm[n - i];
      assign_i128(out[n], acc);
    }
    return;
  }

#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (std::int64_t n = 0; n < len; ++n) {
    Integer acc = 0;
    for (std::int64_t i = 0; i <= n; ++i) {
      if (sgn(as[i]) == 0 || sgn(bs[n - i]) == 0) continue;
      mpz_addmul(acc.get_mpz_t(), as[i].get_mpz_t(), bs[n - i].get_mpz_t());
    }
    out[n] = std::move(acc);
  }
}

std::size_t long_divide(std::span<const Integer> num, std::span<const Integer> den,
                        std::span<Integer> out) {
  const std::size_t len = out.size();
  std::size_t n = 0;

  // Machine-integer phase: runs until a value leaves int64 range.
  if (std::all_of(den.begin(), den.begin() + len, fits_int64)) {
    const auto dm = to_machine(den.first(len));
    const std::int64_t lead = dm[0];
    std::vector<std::int64_t> qm;
    qm.reserve(len);
    for (; n < len; ++n) {
      if (!fits_int64(num[n])) break;
      i128 acc = num[n].get_si();
      bool overflow = false;
      for (std::size_t k = 1; k <= n; ++k) {
        if (dm[k] == 0 || qm[n - k] == 0) continue;
        const i128 term = static_cast<i128>(dm[k]) * qm[n - k];
        if (__builtin_sub_overflow(acc, term, &acc)) {
          overflow = true;
          break;
        }
      }
      if (overflow) break;
      if (acc % lead != 0) {
        for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<long>(qm[i]);
        return n;
      }
      const i128 quotient = acc / lead;
      if (quotient < INT64_MIN || quotient > INT64_MAX) break;
      qm.push_back(static_cast<std::int64_t>(quotient));
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<long>(qm[i]);
  }

  Integer acc;
  for (; n < len; ++n) {
    acc = num[n];
    for (std::size_t k = 1; k <= n; ++k) {
      if (sgn(den[k]) == 0) continue;
      mpz_submul(acc.get_mpz_t(), den[k].get_mpz_t(), out[n - k].get_mpz_t());
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), den[0].get_mpz_t())) return n;
    mpz_divexact(out[n].get_mpz_t(), acc.get_mpz_t(), den[0].get_mpz_t());
  }
  return len;
}

void apply_binomial(std::span<Integer> c, std::int64_t step, int sign, std::int64_t power) {
  const auto len = static_cast<std::int64_t>(c.size());
  if (step >= len || power == 0) return;
  for (std::int64_t rep = 0; rep < (power > 0 ? power : -power); ++rep) {
    if (power > 0) {
      for (std::int64_t n = len - 1; n >= step; --n) {
        if (sign > 0) c[n] -= c[n - step];
        else c[n] += c[n - step];
      }
    } else {
      for (std::int64_t n = step; n < len; ++n) {
        if (sign > 0) c[n] += c[n - step];
        else c[n] -= c[n - step];
      }
    }
  }
}

namespace reference {

void convolve(std::span<const Integer> a, std::span<const Integer> b, std::span<Integer> out) {
  for (std::size_t n = 0; n < out.size(); ++n) {
    Integer acc = 0;
    for (std::size_t i = 0; i <= n; ++i) acc += a[i] * b[n - i];
    out[n] = acc;
  }
}

std::size_t long_divide(std::span<const Integer> num, std::span<const Integer> den,
                        std::span<Integer> out) {
  for (std::size_t n = 0; n < out.size(); ++n) {
    Integer acc = num[n];
    for (std::size_t k = 1; k <= n; ++k) acc -= den[k] * out[n - k];
    if (acc % den[0] != 0) return n;
    out[n] = acc / den[0];
  }
  return out.size();
}

}  // namespace reference

}  // namespace qseries::kernels
