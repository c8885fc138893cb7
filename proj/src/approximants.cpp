#include "vdc/approximants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace vdc {

mpq_class eta_weight(i64 q) {
    if (mobius(q) == 0) return 0;
    mpq_class r = 1;
    for (auto [p, e] : factorize(q).factors) r *= rat(3, static_cast<long>(p + 3));
    return r;
}

mpq_class mu_over_phi(i64 q) {
    int mu = mobius(q);
    if (mu == 0) return 0;
    return rat(mu, static_cast<long>(euler_phi(q)));
}

namespace {

// Squarefree q <= Q (truncated kinds) or squarefree q dividing the product of
// primes <= R (completed kinds).
std::vector<i64> squarefree_upto(i64 Q) {
    std::vector<i64> out;
    for (i64 q = 1; q <= Q; q++)
        if (mobius(q) != 0) out.push_back(q);
    return out;
}

std::vector<i64> squarefree_smooth(i64 R) {
    std::vector<i64> out{1};
    for (i64 p : primes_upto(R)) {
        size_t sz = out.size();
        for (size_t i = 0; i < sz; i++) out.push_back(out[i] * p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Ramanujan-series expansion: weight w(q) contributes w(q) at every a/q.
Series ramanujan_expand(const std::vector<i64> &support, const std::function<mpq_class(i64)> &w) {
    Series out;
    for (i64 q : support) {
        mpq_class c = w(q);
        if (c == 0) continue;
        double cd = c.get_d();
        for (i64 a = 0; a < q; a++)
            if (gcd(a, q) == 1 || q == 1) out.add_term(Freq::make(a, q), cd);
    }
    return out;
}

Series char_twist_series(const DirichletCharacter &chi, const std::vector<i64> &rsupport) {
    // Expansion coefficients at b/(q r'): (1/phi(qr')) chi(b) mu(r')
    // conj(chi(r')) conj(tau).  Gauss sum and value table computed once.
    i64 q = chi.modulus();
    std::complex<double> tau_conj = std::conj(gauss_sum(chi));
    std::vector<std::complex<double>> chi_table(static_cast<size_t>(q));
    for (i64 x = 0; x < q; x++) chi_table[static_cast<size_t>(x)] = chi(x);
    Series out;
    for (i64 rp : rsupport) {
        if (gcd(rp, q) != 1 || mobius(rp) == 0) continue;
        i64 r = q * rp;
        double inv_phi = 1.0 / static_cast<double>(euler_phi(r));
        std::complex<double> base =
            static_cast<double>(mobius(rp)) * std::conj(chi_table[static_cast<size_t>(rp % q)]) *
            tau_conj * inv_phi;
        if (std::abs(base) == 0.0) continue;
        for (i64 b = 0; b < r; b++) {
            if (gcd(b, r) != 1 && r > 1) continue;
            auto c = chi_table[static_cast<size_t>(b % q)] * base;
            out.add_term(Freq::make(b, r), c);
        }
    }
    return out;
}

} // namespace

Series build_series(const ApproximantSpec &spec) {
    i64 Q = static_cast<i64>(std::floor(spec.threshold));
    switch (spec.kind) {
    case ApproximantKind::lambda_truncated:
        return ramanujan_expand(squarefree_upto(Q), mu_over_phi);
    case ApproximantKind::h_truncated:
        return ramanujan_expand(squarefree_upto(Q), eta_weight);
    case ApproximantKind::lambda_completed:
        if (spec.threshold > kMaxCompletedThreshold)
            throw std::invalid_argument("build_series: completed threshold exceeds guard");
        return ramanujan_expand(squarefree_smooth(Q), mu_over_phi);
    case ApproximantKind::h_completed:
        if (spec.threshold > kMaxCompletedThreshold)
            throw std::invalid_argument("build_series: completed threshold exceeds guard");
        return ramanujan_expand(squarefree_smooth(Q), eta_weight);
    case ApproximantKind::char_truncated: {
        if (!spec.chi || !spec.chi->is_primitive())
            throw std::invalid_argument("build_series: char kinds need a primitive character");
        return char_twist_series(*spec.chi, squarefree_upto(Q));
    }
    case ApproximantKind::char_completed: {
        if (!spec.chi || !spec.chi->is_primitive())
            throw std::invalid_argument("build_series: char kinds need a primitive character");
        if (spec.threshold > kMaxCompletedThreshold)
            throw std::invalid_argument("build_series: completed threshold exceeds guard");
        return char_twist_series(*spec.chi, squarefree_smooth(Q));
    }
    }
    throw std::logic_error("build_series: unknown kind");
}

mpq_class lambda_truncated_value(double Q, i64 n) {
    mpq_class acc = 0;
    for (i64 q = 1; q <= static_cast<i64>(Q); q++) {
        mpq_class w = mu_over_phi(q);
        if (w != 0) acc += w * ramanujan_sum(q, n);
    }
    return acc;
}

mpq_class h_truncated_value(double Q, i64 n) {
    mpq_class acc = 0;
    for (i64 q = 1; q <= static_cast<i64>(Q); q++) {
        mpq_class w = eta_weight(q);
        if (w != 0) acc += w * ramanujan_sum(q, n);
    }
    return acc;
}

mpq_class lambda_completed_value(double R, i64 n) {
    mpq_class acc = 1;
    for (i64 p : primes_upto(static_cast<i64>(R))) {
        if (n % p == 0) return 0;
        acc *= rat(static_cast<long>(p), static_cast<long>(p - 1));
    }
    return acc;
}

mpq_class h_completed_value(double R, i64 n) {
    mpq_class acc = 1;
    for (i64 p : primes_upto(static_cast<i64>(R))) {
        if (n % p == 0) acc *= rat(static_cast<long>(4 * p), static_cast<long>(p + 3));
        else acc *= rat(static_cast<long>(p), static_cast<long>(p + 3));
    }
    return acc;
}

std::complex<double> char_truncated_value(const DirichletCharacter &chi, double Q, i64 n) {
    i64 q = chi.modulus();
    mpq_class acc = 0;
    for (i64 r = 1; r <= static_cast<i64>(Q); r++) {
        if (gcd(r, q) != 1) continue;
        mpq_class w = mu_over_phi(r);
        if (w != 0) acc += w * ramanujan_sum(r, n);
    }
    double scale = static_cast<double>(q) / static_cast<double>(euler_phi(q));
    return scale * std::conj(chi(n)) * acc.get_d();
}

std::complex<double> char_completed_value(const DirichletCharacter &chi, double R, i64 n) {
    i64 q = chi.modulus();
    mpq_class acc = rat(static_cast<long>(q), static_cast<long>(euler_phi(q)));
    for (i64 p : primes_upto(static_cast<i64>(R))) {
        if (q % p == 0) continue;
        if (n % p == 0) return 0;
        acc *= rat(static_cast<long>(p), static_cast<long>(p - 1));
    }
    return std::conj(chi(n)) * acc.get_d();
}

SharpApproximant::SharpApproximant(double Q, double sigma_max, std::vector<SharpComponent> components)
    : Q_(Q), sigma_max_(sigma_max), components_(std::move(components)) {
    bool have_pole = false;
    for (const auto &c : components_) {
        bool is_pole = c.eps == 1;
        bool at_one = std::abs(c.rho - std::complex<double>(1.0, 0.0)) < 1e-12;
        if (is_pole != (at_one && c.chi.is_principal()))
            throw std::invalid_argument("SharpApproximant: eps = +1 exactly at the principal pole");
        if (is_pole) have_pole = true;
    }
    if (!have_pole)
        components_.insert(components_.begin(), SharpComponent{1, {1.0, 0.0}, principal_character()});
}

std::complex<double> SharpApproximant::evaluate_complex(i64 n) const {
    if (n < 1) throw std::invalid_argument("SharpApproximant: n must be >= 1");
    std::complex<double> acc{};
    for (const auto &c : components_) {
        std::complex<double> npow = std::exp((c.rho - 1.0) * std::log(static_cast<double>(n)));
        std::complex<double> F = c.chi.is_principal()
                                     ? std::complex<double>(lambda_truncated_value(Q_, n).get_d(), 0.0)
                                     : char_truncated_value(c.chi, Q_, n);
        acc += static_cast<double>(c.eps) * npow * F;
    }
    return acc;
}

double SharpApproximant::evaluate(i64 n) const { return evaluate_complex(n).real(); }

std::map<i64, mpq_class> sieve_weight_transform(const std::map<i64, mpq_class> &v, i64 Q) {
    for (const auto &[r, w] : v)
        if (r < 1 || r > Q) throw std::invalid_argument("sieve_weight_transform: v supported outside [1, Q]");
    std::map<i64, mpq_class> lambda;
    for (i64 d = 1; d <= Q; d++) {
        mpq_class acc = 0;
        for (i64 r = d; r <= Q; r += d) {
            auto it = v.find(r);
            if (it == v.end()) continue;
            int mu = mobius(r / d);
            if (mu != 0) acc += mu * it->second;
        }
        if (acc != 0) lambda[d] = acc * d;
    }
    return lambda;
}

} // namespace vdc
