#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vdc/approximants.hpp"
#include "vdc/damping.hpp"
#include "vdc/expweight.hpp"
#include "vdc/zeros.hpp"

// Assembly of the weighted point mass on shifted primes, its spectral profile
// over the circle, and the normalised nonnegative cosine polynomial with a
// certified minimum.

namespace vdc {

struct PsiConfig {
    i64 N = 100000;
    double T = 30;                    // base scale for the thresholds
    // Threshold exponents: thresholds are T^{c1} (two inner truncations) and
    // T^{c2} (damping truncation).  Paper-faithful defaults make the
    // truncations trivial at this scale, so demo profiles override them;
    // overrides are flagged in every report.
    double c1 = 0.01;
    double c2 = 0.0001;
    double c3 = 0.000001;
    bool exponents_overridden = false;

    std::optional<ZeroSet> zeros;     // empty optional: no-zero mode
    double m_eff = 10;
    bool exceptional = false;
    i64 q1 = 1;                       // divisor factor in the exceptional case
    int grid_log2 = 0;                // 0: chosen automatically (>= 2N)
    int damping_depth = 3;

    double lambda_threshold() const;  // T^{c1}, at least 2
    double h_threshold() const;       // T^{c1}, at least 2
    double damping_threshold() const; // T^{c2}
};

enum class PsiVariant { lambda_prime, lambda_sharp };

struct SpectralReport {
    double min_value = 0;     // certified lower bound for min_theta S(theta)
    double grid_min = 0;      // smallest grid/refined value found
    double argmin = 0;
    double delta1 = 0;        // max(0, -min_value / N)
    double delta2 = 0;        // (sum Psi) / N
    double derivative_bound = 0;
    int grid_log2 = 0;
};

struct PsiBuild {
    PsiConfig cfg;
    PsiVariant variant = PsiVariant::lambda_prime;
    std::vector<double> values;       // Psi(1..N), index 0 unused
    double sum = 0;
    SpectralReport spectral;
    DampingCombination damping;
    std::vector<std::string> deviations; // config deviations for the report
    std::string to_json() const;
};

PsiBuild build_psi(const PsiConfig &cfg, PsiVariant variant = PsiVariant::lambda_prime);

// S(theta) = sum_n Psi(n) cos(2 pi theta n) scanned on a power-of-two grid by
// FFT, locally refined, and lower-bounded through the derivative bound.
SpectralReport spectral_profile(const std::vector<double> &values, int grid_log2 = 0);

struct CosinePolynomial {
    double a0 = 0;
    std::vector<std::pair<i64, double>> coeffs;   // (shift p-1, coefficient)
    double operator()(double x) const;
};

struct CosineCertificate {
    CosinePolynomial poly;
    bool certified = false;
    double certified_min = 0;
    double value_at_zero = 1;
    int grid_log2 = 0;          // certification grid reached
    std::string to_csv() const; // (shift, coefficient) rows
};

// T(x) = (delta1 N + sum Psi)^{-1} (delta1 N + sum Psi(n) cos(2 pi n x));
// certification: grid minimum minus (h/2) * 2 pi sum n |a_n| >= -1e-9,
// doubling the grid up to 2^22.
CosineCertificate cosine_certificate(const PsiBuild &b);

} // namespace vdc
