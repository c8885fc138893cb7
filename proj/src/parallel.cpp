#include "vdc/parallel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vdc {

using i64 = std::int64_t;

void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

static std::vector<std::complex<double>> dft_impl(const std::vector<std::complex<double>> &v,
                                                  bool parallel) {
    const std::int64_t m = static_cast<std::int64_t>(v.size());
    std::vector<std::complex<double>> out(v.size());
    auto row = [&](std::int64_t k) {
        // Blocked accumulation keeps the summation order fixed.
        std::complex<double> acc{};
        const double w = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
        for (std::int64_t lo = 0; lo < m; lo += kBlock) {
            std::int64_t hi = std::min(m, lo + kBlock);
            std::complex<double> part{};
            for (std::int64_t n = lo; n < hi; n++) {
                double ph = w * static_cast<double>(n % m);
                part += v[static_cast<size_t>(n)] * std::complex<double>(std::cos(ph), std::sin(ph));
            }
            acc += part;
        }
        out[static_cast<size_t>(k)] = acc / static_cast<double>(m);
    };
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t k = 0; k < m; k++) row(k);
    } else {
        for (std::int64_t k = 0; k < m; k++) row(k);
    }
    return out;
}

std::vector<std::complex<double>> dft_serial(const std::vector<std::complex<double>> &v) {
    return dft_impl(v, false);
}

std::vector<std::complex<double>> dft_parallel(const std::vector<std::complex<double>> &v) {
    return dft_impl(v, true);
}

std::vector<std::complex<double>> dft_bluestein(const std::vector<std::complex<double>> &v) {
    const i64 n = static_cast<i64>(v.size());
    if (n == 0) return {};
    size_t m = 1;
    while (m < static_cast<size_t>(2 * n - 1)) m <<= 1;
    // chirp e(-k^2/(2n)); squares reduced mod 2n to keep the phases exact
    auto chirp = [&](i64 k) {
        i64 k2 = static_cast<i64>(static_cast<__int128>(k) * k % (2 * n));
        double ph = -std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n);
        return std::complex<double>(std::cos(ph), std::sin(ph));
    };
    std::vector<std::complex<double>> a(m), b(m);
    for (i64 k = 0; k < n; k++) {
        a[static_cast<size_t>(k)] = v[static_cast<size_t>(k)] * chirp(k);
        b[static_cast<size_t>(k)] = std::conj(chirp(k));
    }
    for (i64 k = 1; k < n; k++) b[m - static_cast<size_t>(k)] = b[static_cast<size_t>(k)];
    fft_pow2(a);
    fft_pow2(b);
    for (size_t i = 0; i < m; i++) a[i] *= b[i];
    // inverse FFT via conjugation
    for (auto &x : a) x = std::conj(x);
    fft_pow2(a);
    std::vector<std::complex<double>> out(static_cast<size_t>(n));
    for (i64 k = 0; k < n; k++)
        out[static_cast<size_t>(k)] =
            std::conj(a[static_cast<size_t>(k)]) / static_cast<double>(m) * chirp(k);
    return out;
}

void fft_pow2(std::vector<std::complex<double>> &a) {
    const size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft_pow2: size must be a power of two");
    for (size_t i = 1, j = 0; i < n; i++) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
        std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0);
            for (size_t j = 0; j < len / 2; j++) {
                std::complex<double> u = a[i + j];
                std::complex<double> t = a[i + j + len / 2] * w;
                a[i + j] = u + t;
                a[i + j + len / 2] = u - t;
                w *= wl;
            }
        }
    }
}

} // namespace vdc
