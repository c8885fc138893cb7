#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vdc/arith.hpp"
#include "vdc/cyclotomic.hpp"

// Rational Fourier series over Q/Z: finite maps from reduced rationals a/q to
// coefficients.  Two backends share one template: complex<double> with a
// per-series tolerance (default 1e-9), and exact cyclotomic-rational
// coefficients for the checks that must hold with zero tolerance.

namespace vdc {

// Reduced rational a/q in Q/Z with 0 <= a < q, gcd(a, q) = 1.
struct Freq {
    i64 a = 0;
    i64 q = 1;

    static Freq make(i64 a, i64 q);
    Freq operator+(const Freq &o) const;
    Freq operator-() const;
    auto operator<=>(const Freq &) const = default;
};

inline constexpr i64 kMaxDenominator = (i64(1) << 31);
inline constexpr double kSeriesTol = 1e-9;

std::complex<double> unit_phase(const Freq &f, i64 n); // e(f * n)

template <class C> struct CoefficientOps;

template <> struct CoefficientOps<std::complex<double>> {
    static bool negligible(const std::complex<double> &c, double tol) { return std::abs(c) <= tol; }
    static std::complex<double> conj(const std::complex<double> &c) { return std::conj(c); }
    static std::complex<double> to_complex(const std::complex<double> &c) { return c; }
    static std::complex<double> twist(const std::complex<double> &c, const Freq &f, i64 h) {
        return c * unit_phase(f, h);
    }
};

template <> struct CoefficientOps<Cyclotomic> {
    static bool negligible(const Cyclotomic &c, double) { return c.is_zero(); }
    static Cyclotomic conj(const Cyclotomic &c) { return c.conj(); }
    static std::complex<double> to_complex(const Cyclotomic &c) { return c.to_complex(); }
    static Cyclotomic twist(const Cyclotomic &c, const Freq &f, i64 h) {
        return c * Cyclotomic::root_of_unity(f.q, (f.a % f.q) * (h % f.q) % f.q);
    }
};

struct SeriesNorms {
    double wedge_inf = 0;
    double wedge_one = 0;
    i64 support = 1;             // largest denominator present
    std::complex<double> average;
};

struct DominationResult {
    bool holds = true;
    std::optional<Freq> witness;  // first offending frequency
    double worst_slack = 0;       // most negative of f^(lambda) + tol - |g^(lambda)|
};

template <class C> class BasicSeries {
  public:
    using coef_type = C;
    using map_type = std::map<Freq, C>;

    BasicSeries() = default;

    void add_term(const Freq &f, const C &c);
    void set_tolerance(double tol) { tol_ = tol; }
    double tolerance() const { return tol_; }

    const map_type &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    C coefficient(const Freq &f) const;

    BasicSeries operator+(const BasicSeries &o) const;
    BasicSeries operator-(const BasicSeries &o) const;
    BasicSeries operator*(const BasicSeries &o) const;   // Q/Z convolution
    BasicSeries scaled(const C &s) const;
    BasicSeries shifted(i64 h) const;                    // n -> n + h
    BasicSeries conjugated() const;

    std::complex<double> evaluate(i64 n) const;
    SeriesNorms norms() const;
    i64 period() const;                                  // lcm of denominators

    void prune();                                        // drop negligible terms

  private:
    map_type terms_;
    double tol_ = kSeriesTol;
};

using Series = BasicSeries<std::complex<double>>;
using ExactSeries = BasicSeries<Cyclotomic>;

Series to_complex_series(const ExactSeries &s);

// Series of a sampled periodic function: coefficient at a/M is
// (1/M) sum_n v[n] e(-an/M).  Zero coefficients are dropped.
Series series_from_samples(const std::vector<std::complex<double>> &values);
ExactSeries exact_series_from_samples(const std::vector<mpq_class> &values);

// g < f coefficientwise: f^ real and >= -tol, |g^(l)| <= f^(l) + tol on the
// union of supports; the witness frequency is reported on failure.
DominationResult dominates(const Series &g, const Series &f, double tol);

// JSON round-trip: {"terms":[{"a":..,"q":..,"re":..,"im":..}]} where re/im are
// strings holding exact rationals or floating decimals.
std::string series_to_json(const Series &s);
Series series_from_json(const std::string &text);

// Zero-tolerance check of the normalised local triple product at a prime p:
// u(n) = (1-1/p)^2 (1+3/p) v(n+1) v(n-1) w(n) has the closed-form DFT with
// constant coefficient 1 + 1/p and (3 - 2 cos(2 pi k/p))/p elsewhere, every
// coefficient at least 1/p.  All verified in exact cyclotomic arithmetic.
struct LocalProductCheck {
    bool values_match = false;        // product values equal the 0/4/1 pattern
    bool dft_matches = false;
    bool positive = false;            // every coefficient - 1/p certified >= 0
};
LocalProductCheck local_product_dft_check(i64 p);

} // namespace vdc
