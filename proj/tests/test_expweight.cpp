#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "vdc/expweight.hpp"

using namespace vdc;

TEST_CASE("complex gamma basics") {
    CHECK(complex_gamma({1, 0}).real() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(complex_gamma({0.5, 0}).real() == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
    CHECK(complex_gamma({6, 0}).real() == doctest::Approx(120.0).epsilon(1e-12));
    // reflection identity on the critical line
    for (double y : {0.5, 3.0, 17.0, 44.0}) {
        double lhs = std::norm(complex_gamma({0.5, y}));
        double rhs = std::numbers::pi / std::cosh(std::numbers::pi * y);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
    // functional equation z Gamma(z) = Gamma(z+1)
    std::complex<double> z{0.3, 2.5};
    CHECK(std::abs(z * complex_gamma(z) - complex_gamma(z + 1.0)) < 1e-12);
}

TEST_CASE("exponential sums and their bounds") {
    CHECK(exp_sum_direct({1, 0}, 0, 57).real() == doctest::Approx(57.0));
    // the three-part envelope holds with a tame constant on a coarse grid
    for (double th : {0.05, 0.21, 0.43}) {
        auto d = std::abs(exp_sum_direct({0.9, 12.0}, th, 5000));
        auto b = exp_sum_bounds({0.9, 12.0}, th, 5000);
        CHECK(d <= 20 * b.min());
        CHECK(b.trivial == doctest::Approx(std::pow(5000.0, 0.9)));
    }
}

TEST_CASE("quadratic gauss sums") {
    auto a = quadratic_gauss_sum(3, 2, 0, 3);
    CHECK(a.magnitude == doctest::Approx(3 * std::sqrt(3.0)).epsilon(1e-12));
    CHECK(a.r == 1);
    CHECK(a.bound == doctest::Approx(3 * std::sqrt(3.0)));

    auto b = quadratic_gauss_sum(2, 3, 4, 0);
    double direct = 0;
    {
        std::complex<double> acc{};
        for (i64 x = 0; x < 8; x++)
            acc += std::exp(std::complex<double>(0, 2 * std::numbers::pi * (4.0 * x) / 8.0));
        direct = std::abs(acc);
    }
    CHECK(b.magnitude == doctest::Approx(direct).epsilon(1e-12));
    CHECK(b.magnitude <= b.bound + 1e-9);

    auto full = quadratic_gauss_sum(5, 2, 0, 0);
    CHECK(full.magnitude == doctest::Approx(25.0));

    // unit linear coefficient: square-root cancellation exactly
    for (i64 p : {3, 5, 7}) {
        auto u = quadratic_gauss_sum(p, 3, 1, 0);
        CHECK(u.magnitude == doctest::Approx(0.0).epsilon(1e-9)); // full character sum vanishes
        auto q = quadratic_gauss_sum(p, 2, 0, 1);
        CHECK(q.magnitude == doctest::Approx(static_cast<double>(p)).epsilon(1e-9));
    }

    auto scan = quadratic_gauss_scan(3, 4);
    CHECK(scan.violations == 0);
    CHECK(scan.pairs == 81 * 81 - 1);
}

TEST_CASE("weight and its transform") {
    WeightConfig wc{100000};
    CHECK(wc.Y() == doctest::Approx(100000.0 / (2 * std::log(100000.0))));
    CHECK(weight_profile(-1.0) == 0.0);
    CHECK(weight_profile(0.0) == 0.0);
    CHECK(weight(16, WeightConfig{16 * 16}) > 0);
    CHECK_THROWS_AS(WeightConfig{4}.Y(), std::invalid_argument);

    CHECK(weight_transform({1, 0}, 0).real() == doctest::Approx(std::sqrt(std::numbers::pi)));
    // numeric transform of the full profile matches the closed form; the
    // substitution u = sqrt(x) removes the endpoint singularity
    for (double th : {0.0, 0.35, -2.2}) {
        auto numeric = integrate(
            [&](double u) {
                double x = u * u;
                double ph = -2 * std::numbers::pi * x * th;
                return 2.0 * std::exp(-x) * std::complex<double>(std::cos(ph), std::sin(ph));
            },
            0.0, 9.0, 60000);
        CHECK(std::abs(numeric - weight_transform({1, 0}, th)) < 1e-7);
    }
}

TEST_CASE("weight split") {
    auto s = weight_split(0.05);
    CHECK(s.W0(0.04) > 0);
    CHECK(s.W1(0.04) == 0.0);
    CHECK(s.W0(0.2) == 0.0);
    CHECK(s.W1(0.2) == doctest::Approx(weight_profile(0.2)));
    for (double x : {0.06, 0.08, 0.099})
        CHECK(s.W0(x) + s.W1(x) == doctest::Approx(weight_profile(x)).epsilon(1e-12));
    CHECK_THROWS_AS(weight_split(0.0), std::invalid_argument);
    // the numeric transform at zero equals the mass of the large part
    auto mass = integrate([&](double x) { return std::complex<double>(s.W1(x), 0); }, 0.05, 40.0,
                          400000);
    CHECK(std::abs(s.W1_hat(0.0) - mass) < 1e-5);
}
