#include "vdc/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace vdc {

namespace {

// (x^m - 1) divided by the product of Phi_d over proper divisors d of m.
std::vector<mpz_class> compute_cyclotomic(i64 m,
                                          std::map<i64, std::vector<mpz_class>> &cache);

std::vector<mpz_class> poly_div_exact(std::vector<mpz_class> num, const std::vector<mpz_class> &den) {
    // Exact division of integer polynomials, den monic.
    if (den.empty() || den.back() != 1) throw std::logic_error("poly_div_exact: divisor not monic");
    if (num.size() < den.size()) throw std::logic_error("poly_div_exact: degree underflow");
    size_t qsize = num.size() - den.size() + 1;
    std::vector<mpz_class> q(qsize, 0);
    for (size_t k = qsize; k-- > 0;) {
        mpz_class c = num[k + den.size() - 1];
        if (c != 0) {
            q[k] = c;
            for (size_t j = 0; j < den.size(); j++) num[k + j] -= c * den[j];
        }
    }
    for (auto &c : num)
        if (c != 0) throw std::logic_error("poly_div_exact: not exact");
    return q;
}

std::vector<mpz_class> compute_cyclotomic(i64 m, std::map<i64, std::vector<mpz_class>> &cache) {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<mpz_class> num(static_cast<size_t>(m) + 1, 0);
    num[0] = -1;
    num[static_cast<size_t>(m)] = 1;
    for (i64 d : divisors(m)) {
        if (d == m) continue;
        num = poly_div_exact(std::move(num), compute_cyclotomic(d, cache));
    }
    cache[m] = num;
    return num;
}

std::mutex g_cyc_mutex;
std::map<i64, std::vector<mpz_class>> g_cyc_cache;

} // namespace

const std::vector<mpz_class> &cyclotomic_polynomial(i64 m) {
    std::lock_guard<std::mutex> lk(g_cyc_mutex);
    compute_cyclotomic(m, g_cyc_cache);
    return g_cyc_cache[m];
}

Cyclotomic Cyclotomic::root_of_unity(i64 order, i64 k, const mpq_class &scale) {
    if (order < 1) throw std::invalid_argument("root_of_unity: order must be >= 1");
    Cyclotomic z;
    z.order_ = order;
    z.c_.assign(static_cast<size_t>(order), 0);
    k %= order;
    if (k < 0) k += order;
    z.c_[static_cast<size_t>(k)] = scale;
    return z;
}

Cyclotomic Cyclotomic::lifted(i64 order) const {
    if (order % order_ != 0) throw std::logic_error("lifted: order not a multiple");
    if (order == order_) return *this;
    Cyclotomic z;
    z.order_ = order;
    z.c_.assign(static_cast<size_t>(order), 0);
    i64 step = order / order_;
    for (i64 j = 0; j < order_; j++) z.c_[static_cast<size_t>(j * step)] = c_[static_cast<size_t>(j)];
    return z;
}

Cyclotomic &Cyclotomic::operator+=(const Cyclotomic &o) {
    i64 m = lcm(order_, o.order_);
    Cyclotomic a = lifted(m), b = o.lifted(m);
    for (i64 j = 0; j < m; j++) a.c_[static_cast<size_t>(j)] += b.c_[static_cast<size_t>(j)];
    *this = std::move(a);
    return *this;
}

Cyclotomic &Cyclotomic::operator-=(const Cyclotomic &o) {
    *this += -o;
    return *this;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic z = *this;
    for (auto &x : z.c_) x = -x;
    return z;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic &o) const {
    i64 m = lcm(order_, o.order_);
    Cyclotomic a = lifted(m), b = o.lifted(m);
    Cyclotomic z;
    z.order_ = m;
    z.c_.assign(static_cast<size_t>(m), 0);
    for (i64 i = 0; i < m; i++) {
        if (a.c_[static_cast<size_t>(i)] == 0) continue;
        for (i64 j = 0; j < m; j++) {
            if (b.c_[static_cast<size_t>(j)] == 0) continue;
            z.c_[static_cast<size_t>((i + j) % m)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
        }
    }
    return z;
}

Cyclotomic Cyclotomic::operator*(const mpq_class &s) const {
    Cyclotomic z = *this;
    for (auto &x : z.c_) x *= s;
    return z;
}

Cyclotomic Cyclotomic::conj() const {
    Cyclotomic z;
    z.order_ = order_;
    z.c_.assign(static_cast<size_t>(order_), 0);
    for (i64 j = 0; j < order_; j++)
        z.c_[static_cast<size_t>((order_ - j) % order_)] = c_[static_cast<size_t>(j)];
    return z;
}

void Cyclotomic::canonicalize() {
    const auto &phi = cyclotomic_polynomial(order_);
    size_t deg = phi.size() - 1;
    // Polynomial remainder of c_ modulo phi (monic), over Q.
    for (size_t i = c_.size(); i-- > deg;) {
        mpq_class c = c_[i];
        if (c == 0) continue;
        size_t shift = i - deg;
        for (size_t j = 0; j < phi.size(); j++) c_[shift + j] -= c * mpq_class(phi[j]);
    }
    c_.resize(static_cast<size_t>(order_), 0);
}

bool Cyclotomic::is_zero() const {
    Cyclotomic z = *this;
    z.canonicalize();
    for (const auto &x : z.c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::operator==(const Cyclotomic &o) const { return (*this - o).is_zero(); }

bool Cyclotomic::is_rational() const {
    Cyclotomic z = *this;
    z.canonicalize();
    for (size_t j = 1; j < z.c_.size(); j++)
        if (z.c_[j] != 0) return false;
    return true;
}

mpq_class Cyclotomic::to_rational() const {
    Cyclotomic z = *this;
    z.canonicalize();
    for (size_t j = 1; j < z.c_.size(); j++)
        if (z.c_[j] != 0) throw std::logic_error("to_rational: value not rational");
    return z.c_[0];
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> acc{};
    for (i64 j = 0; j < order_; j++) {
        const mpq_class &x = c_[static_cast<size_t>(j)];
        if (x == 0) continue;
        double ph = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(order_);
        acc += x.get_d() * std::complex<double>(std::cos(ph), std::sin(ph));
    }
    return acc;
}

} // namespace vdc
