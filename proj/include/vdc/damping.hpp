#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vdc/characters.hpp"
#include "vdc/fourier.hpp"
#include "vdc/zeros.hpp"

// The damping construction: modulated divisor-indicator atoms, convex
// combinations of them, the per-character domination algorithm, and the
// damping term assembled from a zero set.

namespace vdc {

// Atom(r, b)(n) = r^{5/6} 1_{r|n} e(bn/r^3); Fourier-positive with r
// coefficients r^{-1/6} at the frequencies t/r + b/r^3.
struct PhiAtom {
    i64 r = 1;
    i64 b = 0;          // reduced mod r^3

    static PhiAtom make(i64 r, i64 b);
    PhiAtom conjugate() const;
    i64 period() const;
    std::complex<double> evaluate(i64 n) const;
    auto operator<=>(const PhiAtom &) const = default;
};

Series atom_series(const PhiAtom &a);

// Convex combination of atoms with nonnegative weights summing to <= 1.
// The tag set P records prime divisibility required of every atom modulus;
// the modulus guard stands in for the ambient very-composite modulus.
class DampingCombination {
  public:
    DampingCombination() { weights_[PhiAtom{1, 0}] = 1; }
    DampingCombination(std::map<PhiAtom, double> weights, std::vector<i64> P);

    const std::map<PhiAtom, double> &weights() const { return weights_; }
    const std::vector<i64> &prime_tags() const { return P_; }

    double total_weight() const;
    double weight_of(const PhiAtom &a) const;
    std::complex<double> evaluate(i64 n) const;
    Series to_series() const;
    i64 period() const;

    DampingCombination real_part() const;        // (D + conj D)/2
    DampingCombination truncated(i64 X) const;   // atoms with r <= X only
    DampingCombination scaled(double s) const;

    std::string to_json(double m_eff = 0) const;
    static DampingCombination from_json(const std::string &text);

  private:
    std::map<PhiAtom, double> weights_;
    std::vector<i64> P_;
};

// Default atom-modulus guard, 2^6 3^4 5^3 7^2 times the primes in (7, 50]:
// too large for machine words, so divisibility is checked structurally.
bool default_guard_divides(i64 r);
mpz_class default_modulus_guard();

// omega(p) table and the associated huge constant, exposed exactly and as a
// log2 value; every desk-scale computation uses a configurable stand-in.
struct OmegaTable {
    int operator()(i64 p) const;
    mpz_class exact_constant() const;    // product of omega over all primes
    double log2_constant() const;
};

enum class DominationCase { gauss, trivial, linear, quadratic };

struct DominationCertificate {
    struct PerPrime {
        i64 p = 0;
        int t = 0;          // local conductor exponent
        int beta = 0;       // local atom exponent
        DominationCase taken = DominationCase::gauss;
    };
    std::vector<PerPrime> cases;
    double m_p = 1;          // product of omega(p) over p | q
    bool verified = false;   // coefficientwise check result
    double worst_slack = 0;
};

struct DominationResultF {
    DampingCombination dominator;
    DominationCertificate certificate;
};

// For primitive chi mod q and F a combination, returns F~ with
// chi(n+1) 1_{(n-1,q)=1} F(n) coefficientwise dominated by M_P F~(n),
// M_P the product of omega(p) over p | q.  verify runs the full
// one-period coefficient comparison.
DominationResultF dominate_character(const DirichletCharacter &chi, const DampingCombination &F,
                                     const OmegaTable &omega, bool verify = true,
                                     i64 modulus_guard = 0);

struct DampingBuildReport {
    DampingCombination D;
    double alpha_constant = 1;     // weight of the trivial atom
    double mu = 0;                 // total tuple mass included
    double residual_mass = 0;      // geometric tail beyond the depth cut
    bool exceptional = false;
    std::vector<std::string> notes;
    // Domination checks of the assembled product inequality, one per zero.
    struct JCheck {
        size_t j = 0;
        bool with_divisor_factor = false;
        bool holds = false;
        double worst_slack = 0;
    };
    std::vector<JCheck> checks;
};

struct DampingBuildConfig {
    double N = 1e4;             // scale in the weights N^{-sigma/16}
    int depth = 3;              // tuple depth cut
    double m_eff = 10;          // stand-in for the huge constant
    bool exceptional = false;   // drop the leading zero from the tuples
    i64 check_prime_cutoff = 3; // completed products use primes <= this
    bool run_checks = true;
};

using CharacterResolver = std::function<DirichletCharacter(const ZeroRecord &)>;

DampingBuildReport build_damping(const ZeroSet &zeros, const CharacterResolver &resolve,
                                 const DampingBuildConfig &cfg);

// Deterministic default resolver: first primitive character of the given
// conductor, preferring real ones when the record is flagged real.
DirichletCharacter default_resolver(const ZeroRecord &z);

} // namespace vdc
