#pragma once

#include <map>
#include <optional>

#include <array>

#include "vdc/approximants.hpp"
#include "vdc/damping.hpp"
#include "vdc/fourier.hpp"

// Triple correlations of Ramanujan series against their truncations, the
// character-twisted correlation gap, and the coefficient class membership
// check with divisor-power bounds.

namespace vdc {

// Finitely supported map squarefree q -> rational weight with
// |alpha(q)| <= tau(q)^B / q, checked at construction.
class RamanujanSeries {
  public:
    RamanujanSeries(std::map<i64, mpq_class> alpha, double B);

    const std::map<i64, mpq_class> &alpha() const { return alpha_; }
    double bound() const { return B_; }

    RamanujanSeries truncated(i64 X) const;
    mpq_class evaluate(i64 n) const;            // sum alpha(q) c_q(n)
    Series to_series() const;
    ExactSeries to_exact_series(i64 shift) const; // series of n -> f(n + shift)
    i64 max_support() const;

  private:
    std::map<i64, mpq_class> alpha_;
    double B_;
};

struct ClassCheckResult {
    bool in_class = true;
    std::optional<Freq> worst;      // frequency with the worst margin
    double worst_margin = 0;        // tau(q)^B/q - |f^(lambda)| at the worst
};

// Membership in the class of series supported on squarefree denominators
// q <= X with |f^(lambda)| <= tau(q)^B / q.
ClassCheckResult class_check(const Series &f, double B, i64 X);

struct GapResult {
    double gap = 0;
    Freq attained{0, 1};
};

// sup-norm of F - F_{X1,X2,X3} where F = f1(n+h1) f2(n+h2) f3(n+h3);
// coefficients convolved exactly, magnitudes taken in doubles.
GapResult triple_truncation_gap(const RamanujanSeries &f1, const RamanujanSeries &f2,
                                const RamanujanSeries &f3, std::array<i64, 3> h,
                                std::array<i64, 3> X);

// Same quantity from dense values over one period (independent oracle).
GapResult triple_truncation_gap_dense(const RamanujanSeries &f1, const RamanujanSeries &f2,
                                      const RamanujanSeries &f3, std::array<i64, 3> h,
                                      std::array<i64, 3> X);

struct CharGapOptions {
    std::optional<DampingCombination> damping;  // D and its truncation
    i64 damping_truncation = 0;                 // X4; 0 means no truncation cut
    i64 divisor = 1;                            // q' for the 1_{q'|n} factor
};

// || F+_{chi,Q1} Lambda-_{Q2} H_{Q3} [D_{X4}] [1_{q'|n}]
//    - F~+_{chi,R} Lambda~-_R H~_R [D] [1_{q'|n}] ||^_inf
double char_correlation_gap(const DirichletCharacter &chi, i64 Q1, i64 Q2, i64 Q3, i64 R,
                            const CharGapOptions &opts = {});

// #{a in (Z/q)^*: denom(a/q + b/r) = d}, with the divisor-count bound d(q,r)/r.
struct DenominatorCount {
    i64 count = 0;
    double bound = 0;
};
DenominatorCount denominator_count(i64 q, i64 r, i64 b, i64 d);

// Completed-product series F~+ Lambda~- H~ built prime-by-prime (local factors
// have pairwise coprime periods, so the convolution never collides).
Series completed_triple_series(const DirichletCharacter &chi, i64 R);

} // namespace vdc
