#pragma once

#include <complex>
#include <vector>

#include "vdc/arith.hpp"
#include "vdc/fourier.hpp"

// Dirichlet characters represented by their values on fixed generators of the
// local unit groups (two generators for 2^k, k >= 3), with exact root-of-unity
// values.  Enumeration order is lexicographic in generator exponents, so it is
// deterministic.

namespace vdc {

// One local factor (Z/p^e)^*: generator list with orders and a discrete-log
// table for the whole local group.
struct LocalUnitGroup {
    i64 p = 0;
    int e = 0;
    i64 pe = 1;
    std::vector<i64> gens;    // 1 or 2 generators
    std::vector<i64> orders;  // matching orders, product = phi(p^e)
    std::vector<std::vector<i64>> logs; // logs[u] = exponent vector, empty for non-units
};

const LocalUnitGroup &local_unit_group(i64 p, int e);

class DirichletCharacter {
  public:
    // exponents[i][j]: image exponent of generator j of the i-th local group,
    // the value there being e(exponent / order_of_generator).
    DirichletCharacter(i64 modulus, std::vector<std::vector<i64>> exponents);

    i64 modulus() const { return q_; }
    i64 conductor() const { return conductor_; }
    bool is_primitive() const { return conductor_ == q_; }
    bool is_principal() const { return conductor_ == 1; }
    bool is_real() const;
    i64 order() const { return order_; }

    // Value as an exact root of unity e(num/den); (0,1) with zero flag off units.
    struct Value {
        bool zero = true;
        Freq root;            // e(root) when nonzero
    };
    Value value(i64 n) const;
    std::complex<double> operator()(i64 n) const;

    DirichletCharacter conjugate() const;
    DirichletCharacter primitive_inducer() const;   // character mod conductor

    // Rational Fourier series of the character as a periodic function.
    Series to_series() const;

    const std::vector<std::vector<i64>> &exponents() const { return exps_; }

  private:
    i64 q_;
    std::vector<const LocalUnitGroup *> locals_;
    std::vector<std::vector<i64>> exps_;
    i64 conductor_ = 1;
    i64 order_ = 1;
};

// All phi(q) characters mod q, deterministic order.
std::vector<DirichletCharacter> enumerate_characters(i64 q);
std::vector<DirichletCharacter> primitive_characters(i64 q);
DirichletCharacter principal_character(i64 q = 1);

std::complex<double> gauss_sum(const DirichletCharacter &chi);

// Coefficient of e(bn/r) in the expansion of additive characters over
// primitive multiplicative ones: (1/phi(r)) chi(b) mu(r/q) conj(chi(r/q))
// conj(tau(chi)) when q | r, else 0.
std::complex<double> additive_expansion_coefficient(const DirichletCharacter &chi, i64 b, i64 r);

// Polynomial f with chi(1 + p^m x) = e(f(x) / p^{n-m}), no constant term,
// degree N minimal with m(N+1) - floor(log_p N) >= n.
struct PostnikovPolynomial {
    i64 p = 0;
    int m = 0;
    int n = 0;
    i64 mod = 1;                 // p^{n-m}
    std::vector<i64> coeffs;     // b_1..b_N mod p^{n-m}
    i64 eval(i64 x) const;       // f(x) mod p^{n-m}
};

PostnikovPolynomial postnikov(const DirichletCharacter &chi, int m);

} // namespace vdc
