#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <utility>
#include <vector>

// Exact integer arithmetic primitives and the classical arithmetic functions
// used by every other component.  All functions are pure; the prime sieve is
// built once on first use and read-only afterwards, so concurrent use is safe.

namespace vdc {

using i64 = std::int64_t;

inline mpq_class rat(long num, long den = 1) {
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

// n > 0 with its prime factorisation, exponents >= 1, primes increasing.
struct FactoredInt {
    i64 n = 1;
    std::vector<std::pair<i64, int>> factors;
};

// Sieve cap; factorisation by trial division against the cached prime list
// covers n up to the square of the largest sieved prime.
inline constexpr i64 kSieveLimit = 10'000'000;

const std::vector<i64> &primes();                // primes <= kSieveLimit
std::vector<i64> primes_upto(i64 n);             // ascending primes <= n
bool is_prime(i64 n);

FactoredInt factorize(i64 n);                    // n >= 1
std::vector<i64> divisors(i64 n);                // ascending

int mobius(i64 n);
i64 euler_phi(i64 n);
i64 divisor_tau(i64 n);
int omega_distinct(i64 n);
int omega_distinct_below(i64 n, i64 r);          // primes p <= r with p | n

// Von Mangoldt value as an exact symbol (p, k) meaning k * log p; (0,0) when zero.
struct LogPrimePower {
    i64 p = 0;
    int k = 0;
    bool is_zero() const { return p == 0; }
    double value() const;
};

LogPrimePower von_mangoldt(i64 n);               // log p at n = p^k
LogPrimePower von_mangoldt_prime(i64 n);         // log p at n = p only

i64 gcd(i64 a, i64 b);
i64 lcm(i64 a, i64 b);
i64 mod_pow(i64 base, i64 exp, i64 mod);
i64 mod_inverse(i64 a, i64 mod);

// Ramanujan sum c_q(n) = sum over units a mod q of e(an/q), evaluated exactly
// as sum over d | (q, n) of d * mu(q/d).
i64 ramanujan_sum(i64 q, i64 n);

// Expansion of the indicator 1_{(m, n) = delta} as signed divisor indicators:
// returns (d, sign) with delta | d | n, sign = mu(d/delta), zero terms dropped.
std::vector<std::pair<i64, int>> gcd_indicator_expansion(i64 n, i64 delta);

} // namespace vdc
