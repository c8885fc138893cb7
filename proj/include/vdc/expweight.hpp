#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "vdc/arith.hpp"

// Archimedean side: exponential sums twisted by n^{rho-1}, quadratic Gauss
// sums over prime powers, the decaying weight W(x) = x^{-1/2} e^{-x} scaled to
// w(n) = W(n/Y), its Fourier transform through the complex Gamma function, and
// the smooth small/large split of W.

namespace vdc {

// Complex Gamma via a Spouge-type rational approximation with reflection;
// relative error well below 1e-10 on the strip needed here.
std::complex<double> complex_gamma(std::complex<double> z);

struct ZetaExponent {
    double beta = 1.0;       // real part of rho
    double gamma = 0.0;      // imaginary part
    double sigma() const { return 1.0 - beta; }
    std::complex<double> rho() const { return {beta, gamma}; }
};

struct ExpSumBounds {
    double trivial = 0;      // N^beta
    double kuzmin_landau = 0;// N^beta (1+|gamma|) / (N ||theta||)
    double van_der_corput = 0; // N^beta |gamma|^{-1/2}
    double min() const;
};

std::complex<double> exp_sum_direct(const ZetaExponent &rho, double theta, i64 N);
ExpSumBounds exp_sum_bounds(const ZetaExponent &rho, double theta, i64 N);

struct QuadraticGaussSum {
    double magnitude = 0;    // |sum_{x mod p^n} e((a1 x + a2 x^2)/p^n)|
    double bound = 0;        // p^{n - r/2}, doubled root for p = 2
    int r = 0;               // n - min(v_p(a1), v_p(a2)); n when both vanish
};

QuadraticGaussSum quadratic_gauss_sum(i64 p, int n, i64 a1, i64 a2);

// Exhaustive |sum| <= bound check over all (a1, a2) mod p^n: one chirp DFT
// per a2 row covers every a1 at once.
struct QuadraticScanResult {
    i64 pairs = 0;
    i64 violations = 0;
    double worst_margin = 1e300;   // min over pairs of bound - |sum|
};
QuadraticScanResult quadratic_gauss_scan(i64 p, int n);

struct WeightConfig {
    i64 N = 100000;
    double Y() const;        // N / (2 log N)
};

double weight_profile(double x);                    // W(x), zero for x <= 0
double weight(i64 n, const WeightConfig &cfg);      // w(n) = W(n/Y)

// Fourier transform of x^{rho-1} W(x):  Gamma(1/2 - sigma + i gamma) /
// (1 + 2 pi i theta)^{1/2 - sigma + i gamma}.
std::complex<double> weight_transform(const ZetaExponent &rho, double theta);

struct WeightSplit {
    std::function<double(double)> W0;   // supported in [0, 2 eps]
    std::function<double(double)> W1;   // supported in [eps, inf)
    std::function<std::complex<double>(double)> W1_hat;  // numeric transform
    double eps = 0;
};

WeightSplit weight_split(double eps);

// Deterministic numeric quadrature of f over [a, b] (composite Simpson).
std::complex<double> integrate(const std::function<std::complex<double>(double)> &f, double a,
                               double b, int panels = 2048);

} // namespace vdc
