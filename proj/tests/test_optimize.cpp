#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "vdc/optimize.hpp"

using namespace vdc;

TEST_CASE("difference graph") {
    auto g = DifferenceGraph::build(10);
    CHECK(g.forbidden == std::vector<i64>{1, 2, 4, 6});
    CHECK(g.independent({1, 4, 9}));
    CHECK_FALSE(g.independent({1, 2}));
    CHECK_FALSE(g.independent({0, 3}));   // out of range
}

TEST_CASE("exact maximum avoiding sets") {
    CHECK(delta_exact(2).size == 1);
    CHECK(delta_exact(5).size == 2);
    auto d10 = delta_exact(10);
    CHECK(d10.size == 3);
    CHECK(DifferenceGraph::build(10).independent(d10.witness));
    // brute-force cross-check at a small scale
    {
        const i64 N = 12;
        auto g = DifferenceGraph::build(N);
        i64 best = 0;
        for (i64 mask = 0; mask < (1 << N); mask++) {
            std::vector<i64> set;
            for (i64 v = 0; v < N; v++)
                if (mask & (1 << v)) set.push_back(v + 1);
            if (g.independent(set)) best = std::max<i64>(best, static_cast<i64>(set.size()));
        }
        CHECK(delta_exact(N).size == best);
    }
    CHECK_THROWS_AS(delta_exact(65), std::invalid_argument);
}

TEST_CASE("heuristic avoiding sets") {
    for (i64 N : {10, 40, 64}) {
        auto h = delta_heuristic(N);
        CHECK(DifferenceGraph::build(N).independent(h.witness));
        CHECK(h.size <= delta_exact(N).size);
        CHECK(h.size >= 1);
    }
    auto big = delta_heuristic(100);
    CHECK(DifferenceGraph::build(100).independent(big.witness));
    CHECK(big.size >= 4);
}

TEST_CASE("least constant term by cutting planes") {
    auto g2 = gamma_lp(2);
    CHECK(g2.gamma == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(g2.certified);
    CHECK(g2.duality_gap <= 1e-7);
    // optimal polynomial is (1 + cos)/2 up to the certificate tolerance
    CHECK(g2.poly.a0 == doctest::Approx(0.5).epsilon(1e-7));
    REQUIRE(g2.poly.coeffs.size() == 1);
    CHECK(g2.poly.coeffs[0].first == 1);
    CHECK(g2.poly.coeffs[0].second == doctest::Approx(0.5).epsilon(1e-6));

    auto g4 = gamma_lp(4);
    CHECK(g4.gamma <= 0.5 + 1e-9);
    CHECK(g4.certified);
    // dense-scan the certified polynomial for genuine nonnegativity
    double worst = 0;
    for (int i = 0; i < 10000; i++) {
        double x = static_cast<double>(i) / 10000.0;
        worst = std::min(worst, g4.poly(x));
    }
    CHECK(worst >= -1e-6);

    // monotone in the scale: richer frequency sets can only help
    double prev = 1.0;
    for (i64 N : {2, 4, 6, 10, 20}) {
        auto g = gamma_lp(N);
        CHECK(g.gamma <= prev + 1e-8);
        prev = g.gamma;
    }
}

TEST_CASE("density against twice the constant term") {
    auto row10 = compare_delta_gamma(10);
    CHECK(row10.delta == doctest::Approx(0.3));
    CHECK(row10.margin >= 0);
    auto row2 = compare_delta_gamma(2);
    CHECK(row2.delta == doctest::Approx(0.5));
    CHECK(2 * row2.gamma >= row2.delta - 1e-9);
    std::vector<CompareRow> rows{row2, row10};
    std::string csv = compare_csv(rows);
    CHECK(csv.find("N,delta_exact,gamma_lp,two_gamma,margin") != std::string::npos);
}

TEST_CASE("witness independence is checked exactly") {
    for (i64 N : {16, 33, 64}) {
        auto res = delta_exact(N);
        auto g = DifferenceGraph::build(N);
        for (size_t i = 0; i < res.witness.size(); i++)
            for (size_t j = i + 1; j < res.witness.size(); j++) {
                i64 d = std::abs(res.witness[i] - res.witness[j]);
                bool forbidden = false;
                for (i64 f : g.forbidden) forbidden |= (f == d);
                CHECK_FALSE(forbidden);
            }
    }
}
