#include "vdc/fourier.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "vdc/parallel.hpp"

namespace vdc {

Freq Freq::make(i64 a, i64 q) {
    if (q < 1) throw std::invalid_argument("Freq: denominator must be positive");
    a %= q;
    if (a < 0) a += q;
    i64 g = gcd(a, q);
    if (g > 1) { a /= g; q /= g; }
    if (q > kMaxDenominator) throw std::invalid_argument("Freq: denominator exceeds guard");
    return Freq{a, q};
}

Freq Freq::operator+(const Freq &o) const {
    __int128 num = static_cast<__int128>(a) * o.q + static_cast<__int128>(o.a) * q;
    __int128 den = static_cast<__int128>(q) * o.q;
    __int128 m = num % den;
    if (m < 0) m += den;
    // reduce in 128-bit before range-checking
    __int128 x = m, y = den;
    while (y != 0) { __int128 t = x % y; x = y; y = t; }
    if (x == 0) x = den;
    m /= x;
    den /= x;
    if (den > kMaxDenominator) throw std::invalid_argument("Freq: denominator exceeds guard");
    return Freq{static_cast<i64>(m), static_cast<i64>(den)};
}

Freq Freq::operator-() const { return Freq::make(-a, q); }

std::complex<double> unit_phase(const Freq &f, i64 n) {
    i64 r = static_cast<i64>((static_cast<__int128>(f.a) * (((n % f.q) + f.q) % f.q)) % f.q);
    double ph = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(f.q);
    return {std::cos(ph), std::sin(ph)};
}

template <class C> void BasicSeries<C>::add_term(const Freq &f, const C &c) {
    auto it = terms_.find(f);
    if (it == terms_.end()) {
        if (!CoefficientOps<C>::negligible(c, 0.0)) terms_.emplace(f, c);
    } else {
        it->second += c;
        if (CoefficientOps<C>::negligible(it->second, 0.0)) terms_.erase(it);
    }
}

template <class C> C BasicSeries<C>::coefficient(const Freq &f) const {
    auto it = terms_.find(f);
    return it == terms_.end() ? C{} : it->second;
}

template <class C> BasicSeries<C> BasicSeries<C>::operator+(const BasicSeries &o) const {
    BasicSeries out = *this;
    for (const auto &[f, c] : o.terms_) out.add_term(f, c);
    return out;
}

template <class C> BasicSeries<C> BasicSeries<C>::operator-(const BasicSeries &o) const {
    BasicSeries out = *this;
    for (const auto &[f, c] : o.terms_) out.add_term(f, C{} - c);
    return out;
}

template <class C> BasicSeries<C> BasicSeries<C>::operator*(const BasicSeries &o) const {
    BasicSeries out;
    out.tol_ = std::max(tol_, o.tol_);
    for (const auto &[f1, c1] : terms_)
        for (const auto &[f2, c2] : o.terms_) out.add_term(f1 + f2, c1 * c2);
    return out;
}

template <class C> BasicSeries<C> BasicSeries<C>::scaled(const C &s) const {
    BasicSeries out;
    out.tol_ = tol_;
    for (const auto &[f, c] : terms_) out.add_term(f, c * s);
    return out;
}

template <class C> BasicSeries<C> BasicSeries<C>::shifted(i64 h) const {
    BasicSeries out;
    out.tol_ = tol_;
    for (const auto &[f, c] : terms_) out.add_term(f, CoefficientOps<C>::twist(c, f, h));
    return out;
}

template <class C> BasicSeries<C> BasicSeries<C>::conjugated() const {
    BasicSeries out;
    out.tol_ = tol_;
    for (const auto &[f, c] : terms_) out.add_term(-f, CoefficientOps<C>::conj(c));
    return out;
}

template <class C> std::complex<double> BasicSeries<C>::evaluate(i64 n) const {
    std::complex<double> acc{};
    for (const auto &[f, c] : terms_) acc += CoefficientOps<C>::to_complex(c) * unit_phase(f, n);
    return acc;
}

template <class C> SeriesNorms BasicSeries<C>::norms() const {
    SeriesNorms out;
    for (const auto &[f, c] : terms_) {
        double m = std::abs(CoefficientOps<C>::to_complex(c));
        out.wedge_inf = std::max(out.wedge_inf, m);
        out.wedge_one += m;
        out.support = std::max(out.support, f.q);
        if (f.a == 0 && f.q == 1) out.average = CoefficientOps<C>::to_complex(c);
    }
    return out;
}

template <class C> i64 BasicSeries<C>::period() const {
    i64 m = 1;
    for (const auto &[f, c] : terms_) {
        (void)c;
        m = lcm(m, f.q);
        if (m > kMaxDenominator) throw std::invalid_argument("period exceeds guard");
    }
    return m;
}

template <class C> void BasicSeries<C>::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (CoefficientOps<C>::negligible(it->second, tol_)) it = terms_.erase(it);
        else ++it;
    }
}

template class BasicSeries<std::complex<double>>;
template class BasicSeries<Cyclotomic>;

Series to_complex_series(const ExactSeries &s) {
    Series out;
    for (const auto &[f, c] : s.terms()) out.add_term(f, c.to_complex());
    out.prune();
    return out;
}

Series series_from_samples(const std::vector<std::complex<double>> &values) {
    if (values.empty()) throw std::invalid_argument("series_from_samples: empty sample list");
    const i64 m = static_cast<i64>(values.size());
    auto coefs = (m >= 512) ? dft_parallel(values) : dft_serial(values);
    Series out;
    for (i64 k = 0; k < m; k++) {
        auto c = coefs[static_cast<size_t>(k)];
        if (std::abs(c) > kSeriesTol * 1e-3) out.add_term(Freq::make(k, m), c);
    }
    return out;
}

ExactSeries exact_series_from_samples(const std::vector<mpq_class> &values) {
    if (values.empty()) throw std::invalid_argument("exact_series_from_samples: empty sample list");
    const i64 m = static_cast<i64>(values.size());
    ExactSeries out;
    for (i64 k = 0; k < m; k++) {
        Cyclotomic acc;
        for (i64 n = 0; n < m; n++) {
            if (values[static_cast<size_t>(n)] == 0) continue;
            acc += Cyclotomic::root_of_unity(m, -k * n % m, values[static_cast<size_t>(n)]);
        }
        acc = acc * rat(1, static_cast<long>(m));
        if (!acc.is_zero()) out.add_term(Freq::make(k, m), acc);
    }
    return out;
}

DominationResult dominates(const Series &g, const Series &f, double tol) {
    DominationResult res;
    auto fail = [&](const Freq &fr, double slack) {
        if (res.holds || slack < res.worst_slack) {
            res.witness = fr;
            res.worst_slack = std::min(res.worst_slack, slack);
        }
        res.holds = false;
    };
    for (const auto &[fr, c] : f.terms()) {
        if (std::abs(c.imag()) > tol) { fail(fr, -std::abs(c.imag())); return res; }
        if (c.real() < -tol) fail(fr, c.real() + tol);
    }
    for (const auto &[fr, cg] : g.terms()) {
        double bound = f.coefficient(fr).real() + tol;
        double slack = bound - std::abs(cg);
        if (slack < 0) fail(fr, slack);
    }
    return res;
}

LocalProductCheck local_product_dft_check(i64 p) {
    if (p < 2 || !(p == 2 || p % 2 == 1)) throw std::invalid_argument("local_product_dft_check: p must be prime");
    LocalProductCheck out;
    auto v = [&](i64 n) -> mpq_class {
        n = ((n % p) + p) % p;
        return n == 0 ? mpq_class(0) : rat(static_cast<long>(p), static_cast<long>(p - 1));
    };
    auto w = [&](i64 n) -> mpq_class {
        n = ((n % p) + p) % p;
        return n == 0 ? rat(static_cast<long>(4 * p), static_cast<long>(p + 3))
                      : rat(static_cast<long>(p), static_cast<long>(p + 3));
    };
    mpq_class norm = rat(static_cast<long>(p - 1), static_cast<long>(p)) *
                     rat(static_cast<long>(p - 1), static_cast<long>(p)) *
                     rat(static_cast<long>(p + 3), static_cast<long>(p));
    std::vector<mpq_class> u(static_cast<size_t>(p));
    out.values_match = true;
    for (i64 n = 0; n < p; n++) {
        u[static_cast<size_t>(n)] = norm * v(n + 1) * v(n - 1) * w(n);
        mpq_class expect = (n == 0) ? 4 : ((n == 1 || n == p - 1) ? 0 : 1);
        if (p == 2) expect = (n == 0) ? 4 : 0;
        if (u[static_cast<size_t>(n)] != expect) out.values_match = false;
    }
    ExactSeries dft = exact_series_from_samples(u);
    out.dft_matches = true;
    out.positive = true;
    mpq_class inv_p = rat(1, static_cast<long>(p));
    for (i64 k = 0; k < p; k++) {
        Cyclotomic coef = dft.coefficient(Freq::make(k, p));
        if (k == 0) {
            Cyclotomic target(p == 2 ? mpq_class(2) : mpq_class(1 + inv_p));
            if (!(coef == target)) out.dft_matches = false;
            continue;
        }
        if (p == 2) {
            if (!(coef == Cyclotomic(mpq_class(2)))) out.dft_matches = false;
            continue;
        }
        // (3 - z^k - z^{-k})/p, with positivity from the exact factorisation
        // coef - 1/p = (1/p)(1 - z^k)(1 - z^{-k}).
        Cyclotomic target = (Cyclotomic(mpq_class(3)) - Cyclotomic::root_of_unity(p, k) -
                             Cyclotomic::root_of_unity(p, -k)) *
                            inv_p;
        if (!(coef == target)) out.dft_matches = false;
        Cyclotomic one(mpq_class(1));
        Cyclotomic square = (one - Cyclotomic::root_of_unity(p, k)) *
                            (one - Cyclotomic::root_of_unity(p, -k)) * inv_p;
        if (!(coef - Cyclotomic(inv_p) == square)) out.positive = false;
    }
    return out;
}

namespace {

std::string coef_part_to_string(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

double coef_part_from_string(const std::string &s) {
    if (s.find('/') != std::string::npos) {
        mpq_class q(s);
        q.canonicalize();
        return q.get_d();
    }
    return std::stod(s);
}

} // namespace

std::string series_to_json(const Series &s) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[f, c] : s.terms()) {
        terms.push_back({{"a", f.a},
                         {"q", f.q},
                         {"re", coef_part_to_string(c.real())},
                         {"im", coef_part_to_string(c.imag())}});
    }
    nlohmann::json j{{"terms", terms}};
    return j.dump();
}

Series series_from_json(const std::string &text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Series out;
    for (const auto &t : j.at("terms")) {
        double re = t.at("re").is_string() ? coef_part_from_string(t.at("re").get<std::string>())
                                           : t.at("re").get<double>();
        double im = t.at("im").is_string() ? coef_part_from_string(t.at("im").get<std::string>())
                                           : t.at("im").get<double>();
        out.add_term(Freq::make(t.at("a").get<i64>(), t.at("q").get<i64>()), {re, im});
    }
    return out;
}

} // namespace vdc
