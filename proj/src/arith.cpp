#include "vdc/arith.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace vdc {

namespace {

std::vector<i64> build_primes(i64 limit) {
    std::vector<bool> comp(static_cast<size_t>(limit) + 1, false);
    std::vector<i64> ps;
    for (i64 i = 2; i <= limit; i++) {
        if (!comp[static_cast<size_t>(i)]) {
            ps.push_back(i);
            for (i64 j = i * i; j <= limit; j += i) comp[static_cast<size_t>(j)] = true;
        }
    }
    return ps;
}

} // namespace

const std::vector<i64> &primes() {
    static const std::vector<i64> ps = build_primes(kSieveLimit);
    return ps;
}

std::vector<i64> primes_upto(i64 n) {
    if (n <= kSieveLimit) {
        const auto &ps = primes();
        auto it = std::upper_bound(ps.begin(), ps.end(), n);
        return std::vector<i64>(ps.begin(), it);
    }
    return build_primes(n);
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n <= kSieveLimit) {
        const auto &ps = primes();
        return std::binary_search(ps.begin(), ps.end(), n);
    }
    FactoredInt f = factorize(n);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

FactoredInt factorize(i64 n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    FactoredInt out;
    out.n = n;
    i64 m = n;
    for (i64 p : primes()) {
        if (p * p > m) break;
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; e++; }
            out.factors.emplace_back(p, e);
        }
    }
    if (m > 1) {
        if (m > kSieveLimit * kSieveLimit)
            throw std::invalid_argument("factorize: n beyond sieve range");
        out.factors.emplace_back(m, 1);
    }
    return out;
}

std::vector<i64> divisors(i64 n) {
    FactoredInt f = factorize(n);
    std::vector<i64> ds{1};
    for (auto [p, e] : f.factors) {
        size_t sz = ds.size();
        i64 pk = 1;
        for (int k = 1; k <= e; k++) {
            pk *= p;
            for (size_t i = 0; i < sz; i++) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

int mobius(i64 n) {
    FactoredInt f = factorize(n);
    for (auto [p, e] : f.factors)
        if (e > 1) return 0;
    return (f.factors.size() % 2 == 0) ? 1 : -1;
}

i64 euler_phi(i64 n) {
    FactoredInt f = factorize(n);
    i64 r = n;
    for (auto [p, e] : f.factors) r = r / p * (p - 1);
    return r;
}

i64 divisor_tau(i64 n) {
    FactoredInt f = factorize(n);
    i64 r = 1;
    for (auto [p, e] : f.factors) r *= (e + 1);
    return r;
}

int omega_distinct(i64 n) { return static_cast<int>(factorize(n).factors.size()); }

int omega_distinct_below(i64 n, i64 r) {
    int c = 0;
    for (auto [p, e] : factorize(n).factors)
        if (p <= r) c++;
    return c;
}

double LogPrimePower::value() const { return is_zero() ? 0.0 : k * std::log(static_cast<double>(p)); }

LogPrimePower von_mangoldt(i64 n) {
    if (n < 1) throw std::invalid_argument("von_mangoldt: n must be >= 1");
    if (n == 1) return {};
    FactoredInt f = factorize(n);
    if (f.factors.size() != 1) return {};
    return {f.factors[0].first, 1};   // value log p at any power of p
}

LogPrimePower von_mangoldt_prime(i64 n) {
    if (n < 1) throw std::invalid_argument("von_mangoldt_prime: n must be >= 1");
    LogPrimePower v = von_mangoldt(n);
    if (!v.is_zero() && n == v.p) return v;
    return {};
}

i64 gcd(i64 a, i64 b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

i64 lcm(i64 a, i64 b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd(a, b) * b;
}

i64 mod_pow(i64 base, i64 exp, i64 mod) {
    if (mod <= 0) throw std::invalid_argument("mod_pow: modulus must be positive");
    __int128 r = 1, b = ((base % mod) + mod) % mod;
    while (exp > 0) {
        if (exp & 1) r = r * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<i64>(r);
}

i64 mod_inverse(i64 a, i64 mod) {
    if (gcd(a, mod) != 1) throw std::invalid_argument("mod_inverse: not invertible");
    a = ((a % mod) + mod) % mod;
    i64 r0 = mod, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    return ((s0 % mod) + mod) % mod;
}

i64 ramanujan_sum(i64 q, i64 n) {
    if (q < 1) throw std::invalid_argument("ramanujan_sum: q must be >= 1");
    n = n < 0 ? -n : n;
    i64 g = (n == 0) ? q : gcd(q, n);
    i64 total = 0;
    for (i64 d : divisors(g)) total += d * mobius(q / d);
    return total;
}

std::vector<std::pair<i64, int>> gcd_indicator_expansion(i64 n, i64 delta) {
    if (n < 1 || delta < 1 || n % delta != 0)
        throw std::invalid_argument("gcd_indicator_expansion: need delta | n");
    std::vector<std::pair<i64, int>> out;
    for (i64 d : divisors(n)) {
        if (d % delta != 0) continue;
        int s = mobius(d / delta);
        if (s != 0) out.emplace_back(d, s);
    }
    return out;
}

} // namespace vdc
