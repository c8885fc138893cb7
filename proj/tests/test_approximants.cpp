#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "vdc/approximants.hpp"

using namespace vdc;

TEST_CASE("truncated values at tiny thresholds") {
    for (i64 n = 1; n <= 12; n++) {
        CHECK(lambda_truncated_value(2, n) == (n % 2 ? 2 : 0));
        CHECK(h_truncated_value(2, n) == (n % 2 ? rat(2, 5) : rat(8, 5)));
    }
    CHECK(lambda_completed_value(3, 1) == 3);
    CHECK(lambda_completed_value(3, 5) == 3);
    CHECK(lambda_completed_value(3, 4) == 0);
    CHECK(lambda_completed_value(3, 9) == 0);
}

TEST_CASE("series agree with values on a period") {
    for (i64 Q : {2, 5, 10}) {
        Series s = build_series({ApproximantKind::lambda_truncated, static_cast<double>(Q)});
        i64 period = s.period();
        for (i64 n = 0; n < std::min<i64>(period, 400); n++)
            CHECK(std::abs(s.evaluate(n) - lambda_truncated_value(static_cast<double>(Q), n).get_d()) <
                  1e-9);
        CHECK(s.norms().wedge_one <= static_cast<double>(Q) + 1e-9);
    }
    Series h = build_series({ApproximantKind::h_truncated, 6});
    for (i64 n = 0; n < 60; n++)
        CHECK(std::abs(h.evaluate(n) - h_truncated_value(6, n).get_d()) < 1e-9);
}

TEST_CASE("completed forms against product values") {
    Series lt = build_series({ApproximantKind::lambda_completed, 5});
    for (i64 n = 1; n <= 60; n++)
        CHECK(std::abs(lt.evaluate(n) - lambda_completed_value(5, n).get_d()) < 1e-9);
    Series ht = build_series({ApproximantKind::h_completed, 5});
    for (i64 n = 1; n <= 60; n++)
        CHECK(std::abs(ht.evaluate(n) - h_completed_value(5, n).get_d()) < 1e-9);
    CHECK_THROWS_AS(build_series({ApproximantKind::lambda_completed, 17}), std::invalid_argument);

    // truncated and completed constructions agree on the shared frequency set
    Series trunc = build_series({ApproximantKind::lambda_truncated, 5});
    for (const auto &[f, c] : trunc.terms()) {
        if (mobius(f.q) == 0) continue;
        bool smooth = true;
        for (auto [p, e] : factorize(f.q).factors)
            if (p > 5) smooth = false;
        if (!smooth) continue;
        CHECK(std::abs(lt.coefficient(f) - c) < 1e-12);
    }
}

TEST_CASE("character twist kinds") {
    DirichletCharacter chi = primitive_characters(5)[0];
    Series s = build_series({ApproximantKind::char_truncated, 4, chi});
    for (i64 n = 0; n < 100; n++)
        CHECK(std::abs(s.evaluate(n) - char_truncated_value(chi, 4, n)) < 1e-9);
    // non-primitive characters are rejected
    for (auto &psi : enumerate_characters(5))
        if (!psi.is_primitive())
            CHECK_THROWS_AS(build_series({ApproximantKind::char_truncated, 4, psi}),
                            std::invalid_argument);
}

TEST_CASE("sharp approximant") {
    SharpApproximant empty(2, 0.4, {});
    CHECK(empty.evaluate(3) == doctest::Approx(2.0));
    CHECK(empty.evaluate(4) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(empty.evaluate(0), std::invalid_argument);
    // a lone zero component with eps = +1 is rejected
    SharpComponent bad;
    bad.eps = 1;
    bad.rho = {0.9, 1.0};
    CHECK_THROWS_AS(SharpApproximant(2, 0.4, {bad}), std::invalid_argument);
}

TEST_CASE("sieve weights") {
    std::map<i64, mpq_class> v{{1, rat(1)}, {2, rat(-1)}, {3, rat(1, 2)}};
    auto lam = sieve_weight_transform(v, 3);
    for (i64 n = 1; n <= 30; n++) {
        mpq_class lhs = v.at(1) * ramanujan_sum(1, n) + v.at(2) * ramanujan_sum(2, n) +
                        v.at(3) * ramanujan_sum(3, n);
        mpq_class rhs = 0;
        for (const auto &[d, w] : lam)
            if (n % d == 0) rhs += w;
        CHECK(lhs == rhs);
    }
    std::map<i64, mpq_class> out_of_range{{7, rat(1)}};
    CHECK_THROWS_AS(sieve_weight_transform(out_of_range, 3), std::invalid_argument);
}

TEST_CASE("eta weights are the stated local products") {
    CHECK(eta_weight(2) == rat(3, 5));
    CHECK(eta_weight(6) == rat(3, 5) * rat(3, 6));
    CHECK(eta_weight(4) == 0);
    CHECK(mu_over_phi(6) == rat(1, 2));
    CHECK(mu_over_phi(9) == 0);
}
