#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "vdc/correlations.hpp"

using namespace vdc;

namespace {

RamanujanSeries v_series(std::vector<i64> ps) {
    std::map<i64, mpq_class> alpha{{1, rat(1)}};
    for (i64 p : ps) {
        std::map<i64, mpq_class> next = alpha;
        for (const auto &[q, w] : alpha) next[q * p] = w * mu_over_phi(p);
        alpha = std::move(next);
    }
    return RamanujanSeries(std::move(alpha), 1.0);
}

} // namespace

TEST_CASE("ramanujan series constructor guards") {
    CHECK_THROWS_AS(RamanujanSeries({{4, rat(1, 100)}}, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(RamanujanSeries({{3, rat(5)}}, 0.0), std::invalid_argument);
    RamanujanSeries ok({{1, rat(1)}, {6, rat(1, 12)}}, 1.0);
    CHECK(ok.evaluate(6) == rat(1) + rat(1, 12) * 2);   // c_6(6) = phi(6) = 2
    CHECK(ok.max_support() == 6);
}

TEST_CASE("class membership check") {
    Series lam = build_series({ApproximantKind::lambda_truncated, 30});
    auto res = class_check(lam, 2, 30);
    CHECK(res.in_class);
    // too small an exponent must fail with a witness
    auto tight = class_check(lam, 0, 30);
    CHECK_FALSE(tight.in_class);
    CHECK(tight.worst.has_value());
    // support beyond the stated threshold fails
    CHECK_FALSE(class_check(lam, 2, 4).in_class);
}

TEST_CASE("triple truncation gaps") {
    RamanujanSeries f = v_series({2, 3, 5});
    std::array<i64, 3> h{1, 0, -1};
    CHECK_THROWS_AS(triple_truncation_gap(f, f, f, {1, 1, 0}, {4, 4, 4}), std::invalid_argument);
    auto full = triple_truncation_gap(f, f, f, h, {30, 30, 30});
    CHECK(full.gap == doctest::Approx(0.0).epsilon(1e-12));
    auto g = triple_truncation_gap(f, f, f, h, {4, 4, 4});
    auto dense = triple_truncation_gap_dense(f, f, f, h, {4, 4, 4});
    CHECK(g.gap == doctest::Approx(dense.gap).epsilon(1e-9));
    CHECK(g.gap > 0);
    // monotone in the truncation
    auto g8 = triple_truncation_gap(f, f, f, h, {8, 8, 8});
    CHECK(g8.gap <= g.gap + 1e-12);
}

TEST_CASE("character correlation gap") {
    // coinciding supports at the smallest scale
    CHECK(char_correlation_gap(principal_character(1), 2, 2, 2, 2) ==
          doctest::Approx(0.0).epsilon(1e-12));
    DirichletCharacter chi = primitive_characters(5)[0];
    double g3 = char_correlation_gap(chi, 3, 3, 3, 7);
    double g7 = char_correlation_gap(chi, 7, 7, 7, 7);
    CHECK(g7 <= g3 + 1e-12);
    CHECK_THROWS_AS(char_correlation_gap(chi, 9, 3, 3, 7), std::invalid_argument);
    // divisor factor variant stays finite and computes
    CharGapOptions opts;
    opts.divisor = 5;
    double gd = char_correlation_gap(chi, 3, 3, 3, 7, opts);
    CHECK(std::isfinite(gd));
}

TEST_CASE("denominator counts") {
    auto r = denominator_count(6, 1, 0, 6);
    CHECK(r.count == 2);
    CHECK(r.bound == doctest::Approx(6.0));
    CHECK(denominator_count(1, 7, 3, 7).count == 1);
    CHECK(denominator_count(1, 7, 3, 5).count == 0);
    CHECK_THROWS_AS(denominator_count(4, 3, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(denominator_count(6, 4, 2, 3), std::invalid_argument);
    for (i64 q : {2, 6, 10, 15})
        for (i64 r2 : {1, 3, 4, 9}) {
            for (i64 b = 0; b < r2; b++) {
                if (r2 > 1 && gcd(b, r2) != 1) continue;
                i64 total = 0;
                for (i64 d : divisors(lcm(q, r2) * 4)) {
                    auto res = denominator_count(q, r2, b, d);
                    CHECK(static_cast<double>(res.count) <= res.bound + 1e-9);
                    total += res.count;
                }
                CHECK(total == euler_phi(q));    // every unit lands at some denominator
            }
        }
}

TEST_CASE("completed triple series has the stated local structure") {
    DirichletCharacter chi = primitive_characters(5)[0];
    Series s = completed_triple_series(chi, 7);
    // all frequencies divide 5 * 210
    for (const auto &[f, c] : s.terms()) CHECK((5 * 210) % f.q == 0);
    // the zero coefficient is the product of the local averages
    // (each local average is 1, and the character factor has mean over its
    // period equal to its zero coefficient)
    CHECK(std::isfinite(s.norms().wedge_inf));
}
