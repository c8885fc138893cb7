#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "vdc/fourier.hpp"

using namespace vdc;

TEST_CASE("frequency arithmetic stays reduced") {
    Freq f = Freq::make(6, 8);
    CHECK(f.a == 3);
    CHECK(f.q == 4);
    Freq g = Freq::make(-1, 3);
    CHECK(g.a == 2);
    CHECK(g.q == 3);
    Freq s = f + g;
    CHECK(s.a == 5);
    CHECK(s.q == 12);
    CHECK((-Freq::make(0, 1)) == Freq::make(0, 1));
    CHECK_THROWS_AS(Freq::make(1, i64(1) << 33), std::invalid_argument);
}

TEST_CASE("cyclotomic arithmetic is exact") {
    // 1 + z + ... + z^{p-1} = 0
    for (i64 p : {2, 3, 7, 13}) {
        Cyclotomic acc;
        for (i64 k = 0; k < p; k++) acc += Cyclotomic::root_of_unity(p, k);
        CHECK(acc.is_zero());
    }
    // mixed orders: z_6 = -z_3^2
    Cyclotomic z6 = Cyclotomic::root_of_unity(6, 1);
    Cyclotomic z3sq = Cyclotomic::root_of_unity(3, 2);
    CHECK((z6 + z3sq).is_zero());
    // conjugation and rationality
    Cyclotomic z5 = Cyclotomic::root_of_unity(5, 1);
    Cyclotomic norm = z5 * z5.conj();
    CHECK(norm.is_rational());
    CHECK(norm.to_rational() == 1);
    CHECK(std::abs(z5.to_complex() - std::complex<double>(std::cos(2 * M_PI / 5), std::sin(2 * M_PI / 5))) < 1e-15);
}

TEST_CASE("sampling round trip and exact dft") {
    std::vector<std::complex<double>> v{1.0, {0.0, 2.0}, -1.0, 0.5};
    Series s = series_from_samples(v);
    for (i64 n = 0; n < 8; n++)
        CHECK(std::abs(s.evaluate(n) - v[static_cast<size_t>(n % 4)]) < 1e-12);
    CHECK_THROWS_AS(series_from_samples({}), std::invalid_argument);

    std::vector<mpq_class> r{rat(1), rat(0), rat(0)};
    ExactSeries e = exact_series_from_samples(r);   // indicator of 3 | n
    for (i64 a = 0; a < 3; a++)
        CHECK(e.coefficient(Freq::make(a, 3)).to_rational() == rat(1, 3));

    // constant function: a single zero-frequency coefficient
    std::vector<std::complex<double>> c{1.0, 1.0, 1.0, 1.0, 1.0};
    Series sc = series_from_samples(c);
    CHECK(sc.size() == 1);
    CHECK(std::abs(sc.coefficient(Freq::make(0, 1)).real() - 1.0) < 1e-12);
}

TEST_CASE("domination with witness reporting") {
    Series f;
    f.add_term(Freq::make(0, 1), 1.0);
    f.add_term(Freq::make(1, 4), 0.25);
    Series g;
    g.add_term(Freq::make(1, 4), {0.2, 0.1});       // |0.2 + 0.1i| < 0.25
    auto res = dominates(g, f, 0);
    CHECK(res.holds);
    g.add_term(Freq::make(1, 2), {0.5, 0.0});       // frequency missing from f
    auto bad = dominates(g, f, 1e-9);
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.witness.has_value());
    CHECK(*bad.witness == Freq::make(1, 2));
    // a negative coefficient disqualifies the dominator
    Series neg;
    neg.add_term(Freq::make(0, 1), -0.5);
    CHECK_FALSE(dominates(Series{}, neg, 1e-12).holds);
}

TEST_CASE("local product closed form at single primes") {
    for (i64 p : {2, 3, 5, 97}) {
        auto r = local_product_dft_check(p);
        CHECK(r.values_match);
        CHECK(r.dft_matches);
        CHECK(r.positive);
    }
}

TEST_CASE("series json carries exact-looking strings") {
    Series s;
    s.add_term(Freq::make(2, 5), {1.0 / 3.0, -0.125});
    std::string j = series_to_json(s);
    CHECK(j.find("\"a\"") != std::string::npos);
    CHECK(j.find("\"q\"") != std::string::npos);
    Series t = series_from_json(j);
    CHECK(std::abs(t.coefficient(Freq::make(2, 5)) - s.coefficient(Freq::make(2, 5))) < 1e-15);
    // rational strings parse too
    Series u = series_from_json(R"({"terms":[{"a":1,"q":3,"re":"1/3","im":"0"}]})");
    CHECK(std::abs(u.coefficient(Freq::make(1, 3)).real() - 1.0 / 3.0) < 1e-15);
}

TEST_CASE("wedge-inf never exceeds the mean absolute value") {
    std::vector<std::complex<double>> v{3.0, {0, -1}, 0.25, {2, 2}, -1.0, 0.0};
    Series s = series_from_samples(v);
    double av = 0;
    for (auto &x : v) av += std::abs(x);
    av /= static_cast<double>(v.size());
    CHECK(s.norms().wedge_inf <= av + 1e-12);
}
