// Times the OpenMP kernels against the serial reference versions.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <vector>

#include "qseries/kernels.hpp"

using qseries::Integer;
namespace kernels = qseries::kernels;

namespace {

std::vector<Integer> random_coeffs(std::mt19937_64& rng, std::size_t n, int bits) {
  std::vector<Integer> v(n);
  for (auto& x : v) {
    x = 0;
    for (int b = 0; b < bits; b += 32) {
      x <<= 32;
      x += static_cast<unsigned long>(rng() & 0xffffffffu);
    }
    if (rng() & 1) x = -x;
  }
  return v;
}

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e100;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 2000;
  const int reps = argc > 2 ? std::atoi(argv[2]) : 3;
  std::mt19937_64 rng(7);
  std::printf("threads %d, length %zu, best of %d\n", omp_get_max_threads(), n, reps);
  std::printf("%-28s %12s %12s %8s\n", "kernel", "parallel s", "serial s", "ratio");

  for (int bits : {32, 200}) {
    const auto a = random_coeffs(rng, n, bits);
    const auto b = random_coeffs(rng, n, bits);
    std::vector<Integer> out(n), ref(n);
    const double tp = best_of(reps, [&] { kernels::convolve(a, b, out); });
    const double ts = best_of(reps, [&] { kernels::reference::convolve(a, b, ref); });
    if (out != ref) {
      std::fprintf(stderr, "convolve mismatch at %d bits\n", bits);
      return 1;
    }
    char label[32];
    std::snprintf(label, sizeof label, "convolve %d-bit", bits);
    std::printf("%-28s %12.4f %12.4f %8.2f\n", label, tp, ts, ts / tp);
  }

  {
    // Dividing a product by one factor, so the quotient is exact.
    const auto q = random_coeffs(rng, n, 20);
    auto den = random_coeffs(rng, n, 20);
    den[0] = 1;
    std::vector<Integer> num(n), out(n), ref(n);
    kernels::convolve(q, den, num);
    const double tp = best_of(reps, [&] { kernels::long_divide(num, den, out); });
    const double ts = best_of(reps, [&] { kernels::reference::long_divide(num, den, ref); });
    if (out != ref || out != q) {
      std::fprintf(stderr, "long_divide mismatch\n");
      return 1;
    }
    std::printf("%-28s %12.4f %12.4f %8.2f\n", "long_divide", tp, ts, ts / tp);
  }
  return 0;
}
