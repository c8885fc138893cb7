#include "vdc/expweight.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "vdc/parallel.hpp"

namespace vdc {

namespace {

// Small parameter keeps the alternating-sum cancellation negligible; the
// measured relative error on the strip is below 1e-11.
constexpr int kSpougeA = 10;

double spouge_coeff(int k) {
    // c_k = (-1)^{k-1} / (k-1)! * (a-k)^{k-1/2} e^{a-k}
    double sign = (k % 2 == 1) ? 1.0 : -1.0;
    double lg = -std::lgamma(static_cast<double>(k)); // 1/(k-1)!
    double ak = static_cast<double>(kSpougeA - k);
    return sign * std::exp(lg + (k - 0.5) * std::log(ak) + ak);
}

const std::vector<double> &spouge_table() {
    static const std::vector<double> t = [] {
        std::vector<double> v(kSpougeA);
        v[0] = std::sqrt(2.0 * std::numbers::pi);
        for (int k = 1; k < kSpougeA; k++) v[static_cast<size_t>(k)] = spouge_coeff(k);
        return v;
    }();
    return t;
}

} // namespace

std::complex<double> complex_gamma(std::complex<double> z) {
    if (z.real() < 0.5) {
        // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
        return std::numbers::pi / (std::sin(std::numbers::pi * z) * complex_gamma(1.0 - z));
    }
    const auto &c = spouge_table();
    std::complex<double> zm = z - 1.0;
    std::complex<double> acc = c[0];
    for (int k = 1; k < kSpougeA; k++) acc += c[static_cast<size_t>(k)] / (zm + static_cast<double>(k));
    std::complex<double> shifted = zm + static_cast<double>(kSpougeA);
    return std::exp((zm + 0.5) * std::log(shifted) - shifted) * acc;
}

double ExpSumBounds::min() const {
    return std::min({trivial, kuzmin_landau, van_der_corput});
}

std::complex<double> exp_sum_direct(const ZetaExponent &rho, double theta, i64 N) {
    return blocked_sum<std::complex<double>>(N, [&](i64 i) {
        double n = static_cast<double>(i + 1);
        double ph = 2.0 * std::numbers::pi * theta * n + rho.gamma * std::log(n);
        return std::pow(n, rho.beta - 1.0) * std::complex<double>(std::cos(ph), std::sin(ph));
    });
}

ExpSumBounds exp_sum_bounds(const ZetaExponent &rho, double theta, i64 N) {
    ExpSumBounds b;
    double nb = std::pow(static_cast<double>(N), rho.beta);
    double dist = std::abs(theta - std::round(theta));
    b.trivial = nb;
    b.kuzmin_landau = dist > 0 ? nb * (1.0 + std::abs(rho.gamma)) /
                                     (static_cast<double>(N) * dist)
                               : std::numeric_limits<double>::infinity();
    b.van_der_corput = rho.gamma != 0 ? nb / std::sqrt(std::abs(rho.gamma))
                                      : std::numeric_limits<double>::infinity();
    return b;
}

QuadraticGaussSum quadratic_gauss_sum(i64 p, int n, i64 a1, i64 a2) {
    i64 pn = 1;
    for (int i = 0; i < n; i++) pn *= p;
    a1 = ((a1 % pn) + pn) % pn;
    a2 = ((a2 % pn) + pn) % pn;
    QuadraticGaussSum out;
    if (a1 == 0 && a2 == 0) {
        out.magnitude = static_cast<double>(pn);
        out.bound = static_cast<double>(pn);
        out.r = 0;
        return out;
    }
    auto vp = [&](i64 x) {
        if (x == 0) return n;
        int v = 0;
        while (x % p == 0) { x /= p; v++; }
        return v;
    };
    out.r = n - std::min(vp(a1), vp(a2));
    // direct summation; phases tabulated once
    std::vector<std::complex<double>> table(static_cast<size_t>(pn));
    for (i64 j = 0; j < pn; j++) {
        double ph = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(pn);
        table[static_cast<size_t>(j)] = {std::cos(ph), std::sin(ph)};
    }
    std::complex<double> acc = blocked_sum<std::complex<double>>(pn, [&](i64 x) {
        i64 e = static_cast<i64>((static_cast<__int128>(a1) * x + static_cast<__int128>(a2) * x % pn * x) % pn);
        return table[static_cast<size_t>(e)];
    });
    out.magnitude = std::abs(acc);
    double base = std::pow(static_cast<double>(p), static_cast<double>(n) - out.r / 2.0);
    out.bound = (p == 2) ? base * std::sqrt(2.0) : base;
    return out;
}

QuadraticScanResult quadratic_gauss_scan(i64 p, int n) {
    i64 pn = 1;
    for (int i = 0; i < n; i++) pn *= p;
    std::vector<int> vp(static_cast<size_t>(pn), n);
    for (i64 x = 1; x < pn; x++) {
        int v = 0;
        i64 y = x;
        while (y % p == 0) { y /= p; v++; }
        vp[static_cast<size_t>(x)] = v;
    }
    std::vector<std::complex<double>> table(static_cast<size_t>(pn));
    for (i64 j = 0; j < pn; j++) {
        double ph = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(pn);
        table[static_cast<size_t>(j)] = {std::cos(ph), std::sin(ph)};
    }
    double extra = (p == 2) ? std::sqrt(2.0) : 1.0;
    QuadraticScanResult res;
    std::vector<QuadraticScanResult> partial(static_cast<size_t>(pn));
#pragma omp parallel for schedule(static)
    for (i64 a2 = 0; a2 < pn; a2++) {
        QuadraticScanResult loc;
        loc.worst_margin = 1e300;
        std::vector<std::complex<double>> g(static_cast<size_t>(pn));
        for (i64 x = 0; x < pn; x++)
            g[static_cast<size_t>(x)] =
                table[static_cast<size_t>(static_cast<i64>(static_cast<__int128>(a2) * x % pn * x % pn))];
        // row[a1] = sum_x g(x) e(-2 pi i a1 x / pn); magnitudes match the
        // +a1 convention by conjugation symmetry of the pair set
        auto row = dft_bluestein(g);
        for (i64 a1 = 0; a1 < pn; a1++) {
            if (a1 == 0 && a2 == 0) continue;   // degenerate full sum
            int r = n - std::min(vp[static_cast<size_t>(a1)], vp[static_cast<size_t>(a2)]);
            double bound = extra * std::pow(static_cast<double>(p), static_cast<double>(n) - r / 2.0);
            double mag = std::abs(row[static_cast<size_t>(a1)]);
            double margin = bound - mag;
            loc.pairs++;
            if (margin < loc.worst_margin) loc.worst_margin = margin;
            if (margin < -1e-6) loc.violations++;
        }
        partial[static_cast<size_t>(a2)] = loc;
    }
    for (const auto &loc : partial) {
        res.pairs += loc.pairs;
        res.violations += loc.violations;
        res.worst_margin = std::min(res.worst_margin, loc.worst_margin);
    }
    return res;
}

double WeightConfig::Y() const {
    if (N < 16) throw std::invalid_argument("WeightConfig: N must be >= 16");
    return static_cast<double>(N) / (2.0 * std::log(static_cast<double>(N)));
}

double weight_profile(double x) {
    if (x <= 0) return 0;
    return std::exp(-x) / std::sqrt(x);
}

double weight(i64 n, const WeightConfig &cfg) {
    return weight_profile(static_cast<double>(n) / cfg.Y());
}

std::complex<double> weight_transform(const ZetaExponent &rho, double theta) {
    std::complex<double> s(0.5 - rho.sigma(), rho.gamma);
    std::complex<double> denom_log = std::log(std::complex<double>(1.0, 2.0 * std::numbers::pi * theta));
    return complex_gamma(s) * std::exp(-s * denom_log);
}

namespace {

// C-infinity step: 0 for x <= 0, 1 for x >= 1.
double smooth_step(double x) {
    if (x <= 0) return 0;
    if (x >= 1) return 1;
    double a = std::exp(-1.0 / x);
    double b = std::exp(-1.0 / (1.0 - x));
    return a / (a + b);
}

} // namespace

WeightSplit weight_split(double eps) {
    if (!(eps > 0 && eps < 1)) throw std::invalid_argument("weight_split: eps must be in (0,1)");
    WeightSplit s;
    s.eps = eps;
    auto plateau = [eps](double x) { return smooth_step(x / eps - 1.0); }; // 0 below eps, 1 above 2 eps
    s.W1 = [plateau](double x) { return weight_profile(x) * plateau(x); };
    s.W0 = [plateau](double x) { return weight_profile(x) * (1.0 - plateau(x)); };
    s.W1_hat = [W1 = s.W1, eps](double xi) {
        // the cutoff transition has width eps, so the panel count scales with
        // 1/eps; oscillation adds a frequency-proportional term
        double upper = 40.0;
        int panels = std::max(8192, static_cast<int>(400.0 / eps)) +
                     static_cast<int>(std::min(1e6, 64.0 * std::abs(xi)));
        return integrate(
            [&](double x) {
                double ph = -2.0 * std::numbers::pi * x * xi;
                return W1(x) * std::complex<double>(std::cos(ph), std::sin(ph));
            },
            eps, upper, panels);
    };
    return s;
}

std::complex<double> integrate(const std::function<std::complex<double>(double)> &f, double a,
                               double b, int panels) {
    if (panels % 2 == 1) panels++;
    double h = (b - a) / panels;
    std::complex<double> acc = f(a) + f(b);
    for (int i = 1; i < panels; i++)
        acc += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return acc * (h / 3.0);
}

} // namespace vdc
