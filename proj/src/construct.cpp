#include "vdc/construct.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "vdc/parallel.hpp"

namespace vdc {

double PsiConfig::lambda_threshold() const { return std::max(1.0, std::pow(T, c1)); }
double PsiConfig::h_threshold() const { return std::max(1.0, std::pow(T, c1)); }
double PsiConfig::damping_threshold() const { return std::max(1.0, std::pow(T, c2)); }

namespace {

// Divisor-sum evaluator for a Ramanujan-type series: precomputed sieve
// weights lambda_d turn each value into a sum over divisors d <= Q of n.
struct SieveEvaluator {
    i64 Q = 1;
    std::vector<double> lambda;   // index d

    static SieveEvaluator build(i64 Q, const std::function<mpq_class(i64)> &w) {
        std::map<i64, mpq_class> v;
        for (i64 q = 1; q <= Q; q++) {
            mpq_class c = w(q);
            if (c != 0) v[q] = c;
        }
        auto lam = sieve_weight_transform(v, Q);
        SieveEvaluator ev;
        ev.Q = Q;
        ev.lambda.assign(static_cast<size_t>(Q) + 1, 0.0);
        for (const auto &[d, x] : lam) ev.lambda[static_cast<size_t>(d)] = x.get_d();
        return ev;
    }

    double operator()(i64 n) const {
        if (n == 0) {
            double acc = 0;
            for (i64 d = 1; d <= Q; d++) acc += lambda[static_cast<size_t>(d)];
            return acc;
        }
        n = n < 0 ? -n : n;
        double acc = 0;
        for (i64 d = 1; d * d <= n; d++) {
            if (n % d != 0) continue;
            if (d <= Q) acc += lambda[static_cast<size_t>(d)];
            i64 e = n / d;
            if (e != d && e <= Q) acc += lambda[static_cast<size_t>(e)];
        }
        return acc;
    }
};

} // namespace

PsiBuild build_psi(const PsiConfig &cfg, PsiVariant variant) {
    if (cfg.N < 16) throw std::invalid_argument("build_psi: N too small");
    PsiBuild b;
    b.cfg = cfg;
    b.variant = variant;
    if (cfg.exponents_overridden)
        b.deviations.push_back("threshold exponents overridden from the defaults");
    b.deviations.push_back("effective constant stand-in m_eff=" + std::to_string(cfg.m_eff));

    const i64 N = cfg.N;
    const i64 Ql = static_cast<i64>(cfg.lambda_threshold());
    const i64 Qh = static_cast<i64>(cfg.h_threshold());
    const i64 Qd = static_cast<i64>(cfg.damping_threshold());

    auto lam_ev = SieveEvaluator::build(Ql, mu_over_phi);
    auto h_ev = SieveEvaluator::build(Qh, eta_weight);

    // Damping term from the zero data (trivial without zeros).
    DampingCombination D;
    bool have_zeros = cfg.zeros && !cfg.zeros->empty();
    if (have_zeros) {
        DampingBuildConfig dc;
        dc.N = static_cast<double>(N);
        dc.depth = cfg.damping_depth;
        dc.m_eff = cfg.m_eff;
        dc.exceptional = cfg.exceptional;
        dc.run_checks = false;
        D = build_damping(*cfg.zeros, default_resolver, dc).D;
    }
    b.damping = D.truncated(Qd);
    if (have_zeros && b.damping.total_weight() < D.total_weight() - 1e-12)
        b.deviations.push_back("damping truncation removed atom mass");

    // Sharp components for the lambda_sharp variant.
    std::vector<SharpComponent> comps;
    if (variant == PsiVariant::lambda_sharp && have_zeros) {
        for (const auto &z : cfg.zeros->records()) {
            SharpComponent c;
            c.eps = -1;
            c.rho = {z.beta, z.gamma};
            c.chi = default_resolver(z);
            comps.push_back(c);
        }
    }
    SharpApproximant sharp(static_cast<double>(Ql), cfg.zeros ? cfg.zeros->sigma_max() : 0.5,
                           std::move(comps));

    WeightConfig wc{N};
    const double Y = wc.Y();
    (void)Y;

    // Prime flags up to N + 1.
    std::vector<i64> ps = primes_upto(N + 1);
    std::vector<bool> prime_flag(static_cast<size_t>(N) + 2, false);
    for (i64 p : ps) prime_flag[static_cast<size_t>(p)] = true;

    b.values.assign(static_cast<size_t>(N) + 1, 0.0);
    const DampingCombination &Dt = b.damping;
    parallel_for(N, [&](i64 i) {
        i64 n = i + 1;
        if (cfg.q1 > 1 && n % cfg.q1 != 0) return;
        double lead;
        if (variant == PsiVariant::lambda_prime) {
            if (!prime_flag[static_cast<size_t>(n + 1)]) return;
            lead = std::log(static_cast<double>(n + 1));
        } else {
            lead = sharp.evaluate(n + 1);
        }
        if (lead == 0) return;
        double v = lead * lam_ev(n - 1) * h_ev(n);
        if (have_zeros) v *= Dt.evaluate(n).real();
        v *= weight(n, wc);
        b.values[static_cast<size_t>(n)] = v;
    });

    b.sum = blocked_sum<double>(N + 1, [&](i64 i) { return b.values[static_cast<size_t>(i)]; });
    b.spectral = spectral_profile(b.values, cfg.grid_log2);
    return b;
}

SpectralReport spectral_profile(const std::vector<double> &values, int grid_log2) {
    const i64 N = static_cast<i64>(values.size()) - 1;
    SpectralReport rep;
    if (grid_log2 == 0) {
        grid_log2 = 12;
        while ((i64(1) << grid_log2) < 2 * N) grid_log2++;
    }
    if ((i64(1) << grid_log2) < 2 * N)
        throw std::invalid_argument("spectral_profile: grid must be >= 2N");
    rep.grid_log2 = grid_log2;
    const i64 G = i64(1) << grid_log2;

    std::vector<std::complex<double>> buf(static_cast<size_t>(G));
    for (i64 n = 0; n <= N; n++) buf[static_cast<size_t>(n)] = values[static_cast<size_t>(n)];
    fft_pow2(buf);

    double sum = 0, weighted = 0, weighted2 = 0;
    for (i64 n = 0; n <= N; n++) {
        sum += values[static_cast<size_t>(n)];
        weighted += static_cast<double>(n) * std::abs(values[static_cast<size_t>(n)]);
        weighted2 += static_cast<double>(n) * static_cast<double>(n) *
                     std::abs(values[static_cast<size_t>(n)]);
    }
    rep.derivative_bound = 2.0 * std::numbers::pi * weighted;
    const double curvature_bound = 4.0 * std::numbers::pi * std::numbers::pi * weighted2;

    double best = std::numeric_limits<double>::infinity();
    i64 best_k = 0;
    for (i64 k = 0; k < G; k++) {
        double s = buf[static_cast<size_t>(k)].real();
        if (s < best) {
            best = s;
            best_k = k;
        }
    }

    auto eval = [&](double theta) {
        double acc = 0;
        for (i64 n = 1; n <= N; n++)
            acc += values[static_cast<size_t>(n)] *
                   std::cos(2.0 * std::numbers::pi * theta * static_cast<double>(n));
        return acc;
    };
    // Golden-section refinement around the grid argmin.
    double h = 1.0 / static_cast<double>(G);
    double lo = static_cast<double>(best_k) * h - h, hi = static_cast<double>(best_k) * h + h;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = eval(x1), f2 = eval(x2);
    for (int it = 0; it < 60 && hi - lo > 1e-14; it++) {
        if (f1 < f2) {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = eval(x1);
        } else {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = eval(x2);
        }
    }
    double refined = std::min({best, f1, f2});
    rep.grid_min = refined;
    rep.argmin = (f1 < f2) ? x1 : x2;
    if (best <= std::min(f1, f2)) rep.argmin = static_cast<double>(best_k) * h;

    // Certified lower bound: between neighbouring grid points the value can
    // undershoot the smaller endpoint by at most the chord-curvature slack
    // (h^2/8) sup |S''|, or the cruder (h/2) sup |S'|.
    double slack = std::min((h / 2.0) * rep.derivative_bound, (h * h / 8.0) * curvature_bound);
    rep.min_value = best - slack;
    const double n_total = static_cast<double>(std::max<i64>(N, 1));
    rep.delta1 = std::max(0.0, -rep.min_value / n_total);
    rep.delta2 = sum / n_total;
    return rep;
}

double CosinePolynomial::operator()(double x) const {
    double acc = a0;
    for (const auto &[s, c] : coeffs)
        acc += c * std::cos(2.0 * std::numbers::pi * static_cast<double>(s) * x);
    return acc;
}

std::string CosineCertificate::to_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "shift,coefficient\n0," << poly.a0 << "\n";
    for (const auto &[s, c] : poly.coeffs) os << s << "," << c << "\n";
    return os.str();
}

CosineCertificate cosine_certificate(const PsiBuild &b) {
    const i64 N = b.cfg.N;
    const double d1N = b.spectral.delta1 * static_cast<double>(N);
    const double denom = d1N + b.sum;
    if (!(denom > 0)) throw std::invalid_argument("cosine_certificate: delta1 N + sum Psi must be positive");

    CosineCertificate cert;
    cert.poly.a0 = d1N / denom;
    double nsum = 0, n2sum = 0;
    for (i64 n = 1; n <= N; n++) {
        double v = b.values[static_cast<size_t>(n)];
        if (v == 0) continue;
        cert.poly.coeffs.emplace_back(n, v / denom);
        nsum += static_cast<double>(n) * std::abs(v) / denom;
        n2sum += static_cast<double>(n) * static_cast<double>(n) * std::abs(v) / denom;
    }
    double deriv = 2.0 * std::numbers::pi * nsum;
    double curv = 4.0 * std::numbers::pi * std::numbers::pi * n2sum;
    cert.value_at_zero = cert.poly.a0;
    for (const auto &[s, c] : cert.poly.coeffs) cert.value_at_zero += c;

    int lg = 14;
    while ((i64(1) << lg) < 4 * N) lg++;
    for (; lg <= 22; lg++) {
        const i64 G = i64(1) << lg;
        std::vector<std::complex<double>> buf(static_cast<size_t>(G));
        buf[0] = cert.poly.a0;
        for (const auto &[s, c] : cert.poly.coeffs) buf[static_cast<size_t>(s)] += c;
        fft_pow2(buf);
        double mn = std::numeric_limits<double>::infinity();
        for (i64 k = 0; k < G; k++) mn = std::min(mn, buf[static_cast<size_t>(k)].real());
        double h = 1.0 / static_cast<double>(G);
        cert.certified_min = mn - std::min((h / 2.0) * deriv, (h * h / 8.0) * curv);
        cert.grid_log2 = lg;
        if (cert.certified_min >= -1e-9) {
            cert.certified = true;
            break;
        }
    }
    return cert;
}

std::string PsiBuild::to_json() const {
    nlohmann::json j;
    j["N"] = cfg.N;
    j["T"] = cfg.T;
    j["exponents"] = {cfg.c1, cfg.c2, cfg.c3};
    j["variant"] = variant == PsiVariant::lambda_prime ? "lambda_prime" : "lambda_sharp";
    j["m_eff"] = cfg.m_eff;
    j["exceptional"] = cfg.exceptional;
    j["q1"] = cfg.q1;
    j["sum"] = sum;
    j["delta1"] = spectral.delta1;
    j["delta2"] = spectral.delta2;
    j["spectral_min"] = spectral.min_value;
    j["argmin"] = spectral.argmin;
    j["grid_log2"] = spectral.grid_log2;
    j["a0"] = spectral.delta1 / std::max(spectral.delta1 + spectral.delta2, 1e-300);
    j["paper_deviation"] = deviations;
    return j.dump(2);
}

} // namespace vdc
