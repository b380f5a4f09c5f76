#ifndef QSERIES_KERNELS_HPP
#define QSERIES_KERNELS_HPP

#include <span>

#include "qseries/series.hpp"

// Coefficient-array kernels behind Series. Each production kernel has a
// plain serial counterpart in `reference` that the tests and the benchmark
// compare it against.
namespace qseries::kernels {

/// out[n] = sum_{i<=n} a[i] * b[n-i] for n < out.size().
/// Requires a.size() >= out.size() and b.size() >= out.size().
///
/// Output coefficients are distributed over OpenMP threads. When every
/// input fits in 64 bits and the accumulated sums provably fit in 128 bits,
/// the inner loop runs on machine integers.
void convolve(std::span<const Integer> a, std::span<const Integer> b, std::span<Integer> out);

/// Truncated long division: out = num / den with den[0] != 0, computed by
/// out[n] = (num[n] - sum_{k=1}^{n} den[k] * out[n-k]) / den[0].
/// Returns the first index whose division is inexact, or out.size() on
/// success. Requires num.size() and den.size() >= out.size().
///
/// Runs on 64-bit values with overflow checks and falls back to GMP from
/// the first index that would overflow.
std::size_t long_divide(std::span<const Integer> num, std::span<const Integer> den,
                        std::span<Integer> out);

/// In place multiply by (1 - sign*q^step)^power, truncated to c.size().
void apply_binomial(std::span<Integer> c, std::int64_t step, int sign, std::int64_t power);

namespace reference {

void convolve(std::span<const Integer> a, std::span<const Integer> b, std::span<Integer> out);

std::size_t long_divide(std::span<const Integer> num, std::span<const Integer> den,
                        std::span<Integer> out);

}  // namespace reference

}  // namespace qseries::kernels

#endif  // QSERIES_KERNELS_HPP
