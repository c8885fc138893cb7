#include "vdc/correlations.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "vdc/parallel.hpp"

namespace vdc {

RamanujanSeries::RamanujanSeries(std::map<i64, mpq_class> alpha, double B)
    : alpha_(std::move(alpha)), B_(B) {
    for (auto it = alpha_.begin(); it != alpha_.end();) {
        if (it->second == 0) { it = alpha_.erase(it); continue; }
        i64 q = it->first;
        if (q < 1 || mobius(q) == 0)
            throw std::invalid_argument("RamanujanSeries: support must be squarefree");
        double bound = std::pow(static_cast<double>(divisor_tau(q)), B_) / static_cast<double>(q);
        if (std::abs(it->second.get_d()) > bound * (1 + 1e-12))
            throw std::invalid_argument("RamanujanSeries: stated divisor-power bound violated");
        ++it;
    }
}

RamanujanSeries RamanujanSeries::truncated(i64 X) const {
    std::map<i64, mpq_class> a;
    for (const auto &[q, w] : alpha_)
        if (q <= X) a[q] = w;
    return RamanujanSeries(std::move(a), B_);
}

mpq_class RamanujanSeries::evaluate(i64 n) const {
    mpq_class acc = 0;
    for (const auto &[q, w] : alpha_) acc += w * ramanujan_sum(q, n);
    return acc;
}

Series RamanujanSeries::to_series() const {
    Series out;
    for (const auto &[q, w] : alpha_) {
        double wd = w.get_d();
        for (i64 a = 0; a < q; a++)
            if (q == 1 || gcd(a, q) == 1) out.add_term(Freq::make(a, q), wd);
    }
    return out;
}

ExactSeries RamanujanSeries::to_exact_series(i64 shift) const {
    ExactSeries out;
    for (const auto &[q, w] : alpha_) {
        for (i64 a = 0; a < q; a++) {
            if (q > 1 && gcd(a, q) != 1) continue;
            // coefficient of e(an/q) in f(n + shift): alpha(q) e(a shift / q)
            out.add_term(Freq::make(a, q),
                         Cyclotomic::root_of_unity(q, a * (shift % q) % q, w));
        }
    }
    return out;
}

i64 RamanujanSeries::max_support() const {
    return alpha_.empty() ? 1 : alpha_.rbegin()->first;
}

ClassCheckResult class_check(const Series &f, double B, i64 X) {
    ClassCheckResult res;
    res.worst_margin = std::numeric_limits<double>::infinity();
    for (const auto &[fr, c] : f.terms()) {
        double margin;
        if (mobius(fr.q) == 0 || fr.q > X) {
            margin = -std::abs(c);
        } else {
            double bound = std::pow(static_cast<double>(divisor_tau(fr.q)), B) /
                           static_cast<double>(fr.q);
            margin = bound - std::abs(c);
        }
        if (margin < res.worst_margin) {
            res.worst_margin = margin;
            res.worst = fr;
        }
        if (margin < -1e-12) res.in_class = false;
    }
    if (f.empty()) res.worst_margin = 0;
    return res;
}

namespace {

GapResult sup_gap(const ExactSeries &diff) {
    GapResult g;
    for (const auto &[f, c] : diff.terms()) {
        double m = std::abs(c.to_complex());
        if (m > g.gap) {
            g.gap = m;
            g.attained = f;
        }
    }
    return g;
}

ExactSeries exact_triple(const RamanujanSeries &f1, const RamanujanSeries &f2,
                         const RamanujanSeries &f3, std::array<i64, 3> h) {
    ExactSeries a = f1.to_exact_series(h[0]);
    ExactSeries b = f2.to_exact_series(h[1]);
    ExactSeries c = f3.to_exact_series(h[2]);
    return a * b * c;
}

} // namespace

GapResult triple_truncation_gap(const RamanujanSeries &f1, const RamanujanSeries &f2,
                                const RamanujanSeries &f3, std::array<i64, 3> h,
                                std::array<i64, 3> X) {
    if (h[0] == h[1] || h[0] == h[2] || h[1] == h[2])
        throw std::invalid_argument("triple_truncation_gap: shifts must be distinct");
    ExactSeries full = exact_triple(f1, f2, f3, h);
    ExactSeries trunc = exact_triple(f1.truncated(X[0]), f2.truncated(X[1]), f3.truncated(X[2]), h);
    return sup_gap(full - trunc);
}

GapResult triple_truncation_gap_dense(const RamanujanSeries &f1, const RamanujanSeries &f2,
                                      const RamanujanSeries &f3, std::array<i64, 3> h,
                                      std::array<i64, 3> X) {
    if (h[0] == h[1] || h[0] == h[2] || h[1] == h[2])
        throw std::invalid_argument("triple_truncation_gap_dense: shifts must be distinct");
    i64 period = 1;
    for (const auto *f : {&f1, &f2, &f3})
        for (const auto &[q, w] : f->alpha()) {
            (void)w;
            period = lcm(period, q);
        }
    auto t1 = f1.truncated(X[0]);
    auto t2 = f2.truncated(X[1]);
    auto t3 = f3.truncated(X[2]);
    std::vector<std::complex<double>> vals(static_cast<size_t>(period));
    for (i64 n = 0; n < period; n++) {
        mpq_class full = f1.evaluate(n + h[0]) * f2.evaluate(n + h[1]) * f3.evaluate(n + h[2]);
        mpq_class tr = t1.evaluate(n + h[0]) * t2.evaluate(n + h[1]) * t3.evaluate(n + h[2]);
        vals[static_cast<size_t>(n)] = mpq_class(full - tr).get_d();
    }
    auto hat = period >= 512 ? dft_parallel(vals) : dft_serial(vals);
    GapResult g;
    for (i64 k = 0; k < period; k++) {
        double m = std::abs(hat[static_cast<size_t>(k)]);
        if (m > g.gap) {
            g.gap = m;
            g.attained = Freq::make(k, period);
        }
    }
    return g;
}

Series completed_triple_series(const DirichletCharacter &chi, i64 R) {
    if (static_cast<double>(R) > kMaxCompletedThreshold)
        throw std::invalid_argument("completed_triple_series: R exceeds the completed-form guard");
    i64 q = chi.modulus();
    // Local factors have pairwise coprime periods, so the product series is
    // assembled prime by prime without collisions.
    Series out;
    out.add_term(Freq::make(0, 1), 1.0);
    for (i64 p : primes_upto(R)) {
        if (q % p == 0) continue;
        std::vector<std::complex<double>> vals(static_cast<size_t>(p));
        for (i64 n = 0; n < p; n++) {
            mpq_class vplus = (n + 1) % p == 0 ? 0 : rat(static_cast<long>(p), static_cast<long>(p - 1));
            mpq_class vminus = ((n - 1) % p + p) % p == 0 ? 0 : rat(static_cast<long>(p), static_cast<long>(p - 1));
            mpq_class w = n % p == 0 ? rat(static_cast<long>(4 * p), static_cast<long>(p + 3))
                                     : rat(static_cast<long>(p), static_cast<long>(p + 3));
            vals[static_cast<size_t>(n)] = mpq_class(vplus * vminus * w).get_d();
        }
        out = out * series_from_samples(vals);
    }
    if (q > 1) {
        // p | q local factor: (q_p/phi(q_p)) conj(chi_p)(n+1) v_p(n-1) w_p(n),
        // assembled jointly as one period-q factor.
        std::vector<std::complex<double>> vals(static_cast<size_t>(q));
        for (i64 n = 0; n < q; n++) {
            std::complex<double> c = std::conj(chi(n + 1));
            mpq_class scale = rat(static_cast<long>(q), static_cast<long>(euler_phi(q)));
            mpq_class vminus = 1, w = 1;
            for (auto [p, e] : factorize(q).factors) {
                (void)e;
                vminus *= ((n - 1) % p + p) % p == 0 ? mpq_class(0)
                                                     : rat(static_cast<long>(p), static_cast<long>(p - 1));
                w *= n % p == 0 ? rat(static_cast<long>(4 * p), static_cast<long>(p + 3))
                                : rat(static_cast<long>(p), static_cast<long>(p + 3));
            }
            vals[static_cast<size_t>(n)] = c * mpq_class(scale * vminus * w).get_d();
        }
        out = out * series_from_samples(vals);
    }
    return out;
}

double char_correlation_gap(const DirichletCharacter &chi, i64 Q1, i64 Q2, i64 Q3, i64 R,
                            const CharGapOptions &opts) {
    if (Q1 > R || Q2 > R || Q3 > R)
        throw std::invalid_argument("char_correlation_gap: thresholds must be <= R");
    Series trunc = build_series({ApproximantKind::char_truncated, static_cast<double>(Q1), chi})
                       .shifted(1) *
                   build_series({ApproximantKind::lambda_truncated, static_cast<double>(Q2)})
                       .shifted(-1) *
                   build_series({ApproximantKind::h_truncated, static_cast<double>(Q3)});
    Series full = completed_triple_series(chi, R);
    if (opts.damping) {
        Series d_full = opts.damping->to_series();
        Series d_trunc = (opts.damping_truncation > 0)
                             ? opts.damping->truncated(opts.damping_truncation).to_series()
                             : d_full;
        trunc = trunc * d_trunc;
        full = full * d_full;
    }
    if (opts.divisor > 1) {
        Series ind;
        double c = 1.0 / static_cast<double>(opts.divisor);
        for (i64 a = 0; a < opts.divisor; a++) ind.add_term(Freq::make(a, opts.divisor), c);
        trunc = trunc * ind;
        full = full * ind;
    }
    Series diff = trunc - full;
    return diff.norms().wedge_inf;
}

DenominatorCount denominator_count(i64 q, i64 r, i64 b, i64 d) {
    if (q < 1 || mobius(q) == 0) throw std::invalid_argument("denominator_count: q must be squarefree");
    if (r < 1 || (r > 1 && gcd(b, r) != 1))
        throw std::invalid_argument("denominator_count: b must be a unit mod r");
    DenominatorCount out;
    for (i64 a = 0; a < q; a++) {
        if (q > 1 && gcd(a, q) != 1) continue;
        if (q == 1 && a != 0) continue;
        Freq f = Freq::make(a, q) + Freq::make(b % r, r);
        if (f.q == d) out.count++;
    }
    out.bound = static_cast<double>(d) * static_cast<double>(gcd(q, r)) / static_cast<double>(r);
    return out;
}

} // namespace vdc
