// Serial-versus-parallel timing for the data-parallel kernels: the dense DFT,
// the exhaustive quadratic Gauss-sum scan, and the weighted spectral sums.

#include <chrono>
#include <complex>
#include <iomanip>
#include <iostream>
#include <random>

#include "vdc/expweight.hpp"
#include "vdc/parallel.hpp"

using namespace vdc;

namespace {

template <class F> double time_of(F f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string &name, double serial, double parallel) {
    std::cout << std::left << std::setw(34) << name << std::right << std::setw(10) << serial
              << " s " << std::setw(10) << parallel << " s   x" << std::setprecision(3)
              << (parallel > 0 ? serial / parallel : 0.0) << std::setprecision(6) << "\n";
}

} // namespace

int main(int argc, char **argv) {
    if (argc > 1) set_threads(std::atoi(argv[1]));
    const int pool = thread_count();
    std::cout << "threads: " << pool << "\n\n";
    std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(12) << "serial"
              << std::setw(13) << "parallel" << "   speedup\n";

    std::mt19937 rng(1);
    std::uniform_real_distribution<double> uni(-1, 1);

    {
        std::vector<std::complex<double>> v(4096);
        for (auto &x : v) x = {uni(rng), uni(rng)};
        std::vector<std::complex<double>> a, b;
        double ts = time_of([&] { a = dft_serial(v); });
        double tp = time_of([&] { b = dft_parallel(v); });
        double diff = 0;
        for (size_t i = 0; i < a.size(); i++) diff = std::max(diff, std::abs(a[i] - b[i]));
        row("dense dft (4096)", ts, tp);
        if (diff != 0) {
            std::cout << "MISMATCH: serial and parallel dft differ by " << diff << "\n";
            return 1;
        }
    }

    {
        double ts, tp;
        QuadraticScanResult r1, r2;
        set_threads(1);
        ts = time_of([&] { r1 = quadratic_gauss_scan(3, 7); });
        set_threads(pool);
        tp = time_of([&] { r2 = quadratic_gauss_scan(3, 7); });
        row("quadratic gauss scan (3^7)", ts, tp);
        if (r1.pairs != r2.pairs || r1.violations != r2.violations ||
            r1.worst_margin != r2.worst_margin) {
            std::cout << "MISMATCH: scan results depend on the thread count\n";
            return 1;
        }
    }

    {
        WeightConfig wc{1000000};
        auto body = [&](i64 i) {
            double n = static_cast<double>(i + 1);
            return weight(i + 1, wc) * std::cos(0.1 * n);
        };
        double s1 = 0, s2 = 0;
        set_threads(1);
        double ts = time_of([&] { s1 = blocked_sum<double>(wc.N, body); });
        set_threads(pool);
        double tp = time_of([&] { s2 = blocked_sum<double>(wc.N, body); });
        row("weighted spectral sum (1e6)", ts, tp);
        if (s1 != s2) {
            std::cout << "MISMATCH: blocked sum depends on the thread count\n";
            return 1;
        }
    }

    std::cout << "\nall kernels agree across thread counts\n";
    return 0;
}
