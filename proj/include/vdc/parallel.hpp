#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

// Thread-count-independent parallel primitives.  Work is partitioned into
// fixed-size blocks; block partials are combined serially in block order, so
// every reduction yields bit-identical results no matter how many threads run.

namespace vdc {

void set_threads(int n);
int thread_count();

inline constexpr std::int64_t kBlock = 4096;

// Sum f(i) for i in [0, n).  Deterministic.
template <class T, class F> T blocked_sum(std::int64_t n, F f) {
    if (n <= 0) return T{};
    std::int64_t nblocks = (n + kBlock - 1) / kBlock;
    std::vector<T> partial(static_cast<size_t>(nblocks), T{});
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < nblocks; b++) {
        std::int64_t lo = b * kBlock, hi = std::min(n, lo + kBlock);
        T acc{};
        for (std::int64_t i = lo; i < hi; i++) acc += f(i);
        partial[static_cast<size_t>(b)] = acc;
    }
    T total{};
    for (auto &p : partial) total += p;
    return total;
}

template <class F> void parallel_for(std::int64_t n, F f) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; i++) f(i);
}

// Direct DFT of length-M sample vector: out[k] = (1/M) sum_n v[n] e(-2pi i k n / M).
// Serial reference and OpenMP versions must agree bit-for-bit blockwise.
std::vector<std::complex<double>> dft_serial(const std::vector<std::complex<double>> &v);
std::vector<std::complex<double>> dft_parallel(const std::vector<std::complex<double>> &v);

// In-place radix-2 FFT, size power of two (unnormalised, sign -1 exponent).
void fft_pow2(std::vector<std::complex<double>> &a);

// Unnormalised DFT of arbitrary length via the chirp (Bluestein) transform:
// out[k] = sum_n v[n] e(-2 pi i k n / N).
std::vector<std::complex<double>> dft_bluestein(const std::vector<std::complex<double>> &v);

} // namespace vdc
