#include "vdc/characters.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace vdc {

namespace {

i64 ipow(i64 b, int e) {
    i64 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

i64 primitive_root_mod_p(i64 p) {
    if (p == 2) return 1;
    std::vector<i64> qs;
    for (auto [q, e] : factorize(p - 1).factors) qs.push_back(q);
    for (i64 g = 2; g < p; g++) {
        bool ok = true;
        for (i64 q : qs)
            if (mod_pow(g, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

LocalUnitGroup build_local(i64 p, int e) {
    LocalUnitGroup g;
    g.p = p;
    g.e = e;
    g.pe = ipow(p, e);
    if (p == 2) {
        if (e == 1) {
            // trivial group
        } else if (e == 2) {
            g.gens = {3};
            g.orders = {2};
        } else {
            g.gens = {g.pe - 1, 5};
            g.orders = {2, g.pe / 4};
        }
    } else {
        i64 r = primitive_root_mod_p(p);
        if (e > 1 && mod_pow(r, p - 1, p * p) == 1) r += p;
        g.gens = {r % g.pe};
        g.orders = {euler_phi(g.pe)};
    }
    // Discrete logs by enumerating the generated group.
    g.logs.assign(static_cast<size_t>(g.pe), {});
    size_t k = g.gens.size();
    std::vector<i64> idx(k, 0);
    while (true) {
        i64 u = 1;
        for (size_t i = 0; i < k; i++) u = static_cast<i64>(static_cast<__int128>(u) * mod_pow(g.gens[i], idx[i], g.pe) % g.pe);
        g.logs[static_cast<size_t>(u)] = idx;
        size_t i = 0;
        for (; i < k; i++) {
            if (++idx[i] < g.orders[i]) break;
            idx[i] = 0;
        }
        if (i == k) break;
    }
    return g;
}

std::mutex g_local_mutex;
std::map<std::pair<i64, int>, LocalUnitGroup> g_local_cache;

} // namespace

const LocalUnitGroup &local_unit_group(i64 p, int e) {
    std::lock_guard<std::mutex> lk(g_local_mutex);
    auto key = std::make_pair(p, e);
    auto it = g_local_cache.find(key);
    if (it == g_local_cache.end()) it = g_local_cache.emplace(key, build_local(p, e)).first;
    return it->second;
}

DirichletCharacter::DirichletCharacter(i64 modulus, std::vector<std::vector<i64>> exponents)
    : q_(modulus), exps_(std::move(exponents)) {
    if (modulus < 1) throw std::invalid_argument("DirichletCharacter: modulus must be >= 1");
    FactoredInt f = factorize(modulus);
    if (exps_.size() != f.factors.size())
        throw std::invalid_argument("DirichletCharacter: exponent shape mismatch");
    for (size_t i = 0; i < f.factors.size(); i++) {
        const auto &lg = local_unit_group(f.factors[i].first, f.factors[i].second);
        locals_.push_back(&lg);
        if (exps_[i].size() != lg.gens.size())
            throw std::invalid_argument("DirichletCharacter: exponent shape mismatch");
        for (size_t j = 0; j < exps_[i].size(); j++) {
            exps_[i][j] %= lg.orders[j];
            if (exps_[i][j] < 0) exps_[i][j] += lg.orders[j];
        }
    }
    // Local conductor p^f: f = v_p(order of local character) + 1, with the
    // standard adjustments at p = 2.
    conductor_ = 1;
    order_ = 1;
    for (size_t i = 0; i < locals_.size(); i++) {
        const auto &lg = *locals_[i];
        i64 local_order = 1;
        for (size_t j = 0; j < lg.gens.size(); j++) {
            i64 d = lg.orders[j] / gcd(lg.orders[j], exps_[i][j]);
            local_order = lcm(local_order, d);
        }
        order_ = lcm(order_, local_order);
        i64 cond = 1;
        if (local_order > 1) {
            if (lg.p != 2) {
                int vp = 0;
                i64 t = local_order;
                while (t % lg.p == 0) { t /= lg.p; vp++; }
                cond = ipow(lg.p, vp + 1);
            } else {
                // e >= 2 here; the -1 part alone has conductor 4, the 5-part
                // of order 2^k has conductor 2^{k+2}.
                i64 ord5 = 1;
                if (lg.gens.size() == 2) ord5 = lg.orders[1] / gcd(lg.orders[1], exps_[i][1]);
                if (ord5 > 1) {
                    int v2 = 0;
                    i64 t = ord5;
                    while (t % 2 == 0) { t /= 2; v2++; }
                    cond = ipow(2, v2 + 2);
                } else {
                    cond = 4;
                }
            }
        }
        conductor_ *= cond;
    }
}

DirichletCharacter::Value DirichletCharacter::value(i64 n) const {
    n %= q_;
    if (n < 0) n += q_;
    if (q_ == 1) return {false, Freq{0, 1}};
    if (gcd(n, q_) != 1) return {};
    // Sum of exps * logs / orders over all local generators.
    Freq acc{0, 1};
    for (size_t i = 0; i < locals_.size(); i++) {
        const auto &lg = *locals_[i];
        const auto &lg_logs = lg.logs[static_cast<size_t>(n % lg.pe)];
        for (size_t j = 0; j < lg.gens.size(); j++) {
            i64 ord = lg.orders[j];
            i64 num = static_cast<i64>(static_cast<__int128>(exps_[i][j]) * lg_logs[j] % ord);
            acc = acc + Freq::make(num, ord);
        }
    }
    return {false, acc};
}

std::complex<double> DirichletCharacter::operator()(i64 n) const {
    Value v = value(n);
    if (v.zero) return {};
    return unit_phase(v.root, 1);
}

bool DirichletCharacter::is_real() const {
    for (size_t i = 0; i < locals_.size(); i++)
        for (size_t j = 0; j < exps_[i].size(); j++)
            if ((2 * exps_[i][j]) % locals_[i]->orders[j] != 0) return false;
    return true;
}

DirichletCharacter DirichletCharacter::conjugate() const {
    std::vector<std::vector<i64>> e = exps_;
    for (size_t i = 0; i < e.size(); i++)
        for (size_t j = 0; j < e[i].size(); j++)
            e[i][j] = (locals_[i]->orders[j] - e[i][j]) % locals_[i]->orders[j];
    return DirichletCharacter(q_, std::move(e));
}

DirichletCharacter DirichletCharacter::primitive_inducer() const {
    if (conductor_ == q_) return *this;
    // Match by value on units: the inducing character agrees with this one on
    // every n coprime to q_.
    for (auto &cand : enumerate_characters(conductor_)) {
        if (!cand.is_primitive()) continue;
        bool ok = true;
        for (i64 n = 0; n < q_ && ok; n++) {
            if (gcd(n, q_) != 1) continue;
            Value a = value(n), b = cand.value(n);
            if (a.zero != b.zero || !(a.root == b.root)) ok = false;
        }
        if (ok) return cand;
    }
    throw std::logic_error("primitive inducer not found");
}

Series DirichletCharacter::to_series() const {
    // chi(n) = sum_a g(a) e(an/q), g(a) = (1/q) sum_x chi(x) e(-ax/q).
    std::vector<std::complex<double>> vals(static_cast<size_t>(q_));
    for (i64 n = 0; n < q_; n++) vals[static_cast<size_t>(n)] = (*this)(n);
    return series_from_samples(vals);
}

std::vector<DirichletCharacter> enumerate_characters(i64 q) {
    if (q < 1) throw std::invalid_argument("enumerate_characters: q must be >= 1");
    if (q > 100000) throw std::invalid_argument("enumerate_characters: q beyond supported range");
    FactoredInt f = factorize(q);
    std::vector<const LocalUnitGroup *> locals;
    for (auto [p, e] : f.factors) locals.push_back(&local_unit_group(p, e));
    std::vector<std::vector<i64>> shape;
    for (auto *lg : locals) shape.push_back(std::vector<i64>(lg->gens.size(), 0));
    std::vector<DirichletCharacter> out;
    // Odometer over all exponent tuples, lexicographic.
    while (true) {
        out.emplace_back(q, shape);
        size_t i = 0, j = 0;
        bool carried = true;
        for (i = 0; i < shape.size() && carried; i++) {
            for (j = 0; j < shape[i].size() && carried; j++) {
                if (++shape[i][j] < locals[i]->orders[j]) carried = false;
                else shape[i][j] = 0;
            }
        }
        if (carried) break;
    }
    return out;
}

std::vector<DirichletCharacter> primitive_characters(i64 q) {
    std::vector<DirichletCharacter> out;
    for (auto &c : enumerate_characters(q))
        if (c.is_primitive()) out.push_back(c);
    return out;
}

DirichletCharacter principal_character(i64 q) {
    FactoredInt f = factorize(q);
    std::vector<std::vector<i64>> shape;
    for (auto [p, e] : f.factors)
        shape.push_back(std::vector<i64>(local_unit_group(p, e).gens.size(), 0));
    return DirichletCharacter(q, std::move(shape));
}

std::complex<double> gauss_sum(const DirichletCharacter &chi) {
    i64 r = chi.modulus();
    std::complex<double> acc{};
    for (i64 b = 0; b < r; b++) {
        if (gcd(b, r) != 1 && r > 1) continue;
        acc += chi(b) * unit_phase(Freq::make(b, r), 1);
    }
    if (r == 1) acc = 1.0;
    return acc;
}

std::complex<double> additive_expansion_coefficient(const DirichletCharacter &chi, i64 b, i64 r) {
    if (r < 1) throw std::invalid_argument("additive_expansion_coefficient: r must be >= 1");
    if (gcd(b, r) != 1) throw std::invalid_argument("additive_expansion_coefficient: b must be a unit mod r");
    i64 q = chi.modulus();
    if (!chi.is_primitive()) throw std::invalid_argument("additive_expansion_coefficient: character must be primitive");
    if (r % q != 0) return {};
    i64 rq = r / q;
    int mu = mobius(rq);
    if (mu == 0) return {};
    std::complex<double> cb = chi(b);
    std::complex<double> crq = chi(rq);
    if (crq == std::complex<double>{} && q > 1) return {};
    std::complex<double> tau = gauss_sum(chi);
    return cb * static_cast<double>(mu) * std::conj(crq) * std::conj(tau) /
           static_cast<double>(euler_phi(r));
}

i64 PostnikovPolynomial::eval(i64 x) const {
    i64 acc = 0, xp = 1;
    x %= mod;
    if (x < 0) x += mod;
    for (i64 b : coeffs) {
        xp = static_cast<i64>(static_cast<__int128>(xp) * x % mod);
        acc = static_cast<i64>((acc + static_cast<__int128>(b) * xp) % mod);
    }
    return acc;
}

PostnikovPolynomial postnikov(const DirichletCharacter &chi, int m) {
    i64 q = chi.modulus();
    FactoredInt f = factorize(q);
    if (f.factors.size() != 1) throw std::invalid_argument("postnikov: conductor must be a prime power");
    if (!chi.is_primitive() && !chi.is_principal())
        throw std::invalid_argument("postnikov: character must be primitive");
    i64 p = f.factors[0].first;
    int n = f.factors[0].second;
    if (m < 1 || m > n) throw std::invalid_argument("postnikov: need 1 <= m <= n");
    if (p == 2 && m == 1) throw std::invalid_argument("postnikov: p^m = 2 not allowed");

    int N = 1;
    auto floor_log_p = [&](int x) {
        int k = 0;
        i64 v = p;
        while (v <= x) { v *= p; k++; }
        return k;
    };
    while (static_cast<i64>(m) * (N + 1) - floor_log_p(N) < n) N++;

    i64 md = ipow(p, n - m);
    PostnikovPolynomial poly{p, m, n, md, std::vector<i64>(static_cast<size_t>(N), 0)};

    // Target exponents: chi(1 + p^m x) = e(g(x)/p^{n-m}).
    std::vector<i64> target(static_cast<size_t>(md));
    for (i64 x = 0; x < md; x++) {
        auto v = chi.value(1 + ipow(p, m) * x);
        if (v.zero) throw std::logic_error("postnikov: 1 + p^m x not a unit");
        if (md % v.root.q != 0) throw std::logic_error("postnikov: value order does not divide p^{n-m}");
        target[static_cast<size_t>(x)] = v.root.a * (md / v.root.q) % md;
    }

    // Solve for the coefficients by brute enumeration with early rejection;
    // Z/p^k is not a field, so plain Vandermonde inversion is unavailable.
    std::vector<i64> c(static_cast<size_t>(N), 0);
    std::function<bool(size_t)> search = [&](size_t pos) -> bool {
        if (pos == c.size()) {
            PostnikovPolynomial cand = poly;
            cand.coeffs = c;
            for (i64 x = 0; x < md; x++)
                if (cand.eval(x) != target[static_cast<size_t>(x)]) return false;
            poly.coeffs = c;
            return true;
        }
        for (i64 b = 0; b < md; b++) {
            c[pos] = b;
            if (search(pos + 1)) return true;
        }
        return false;
    };
    if (!search(0)) throw std::logic_error("postnikov: no polynomial found");
    return poly;
}

} // namespace vdc
