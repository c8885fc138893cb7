#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "vdc/zeros.hpp"

using namespace vdc;

TEST_CASE("parsing, closure and validation") {
    ZeroSet empty = ZeroSet::parse(R"({"sigma_max":0.5,"Q":10,"zeros":[]})");
    CHECK(empty.empty());

    ZeroSet one = ZeroSet::parse(
        R"({"sigma_max":0.5,"Q":10,"zeros":[{"beta":0.98,"gamma":2.5,"conductor":5}]})");
    REQUIRE(one.records().size() == 2);
    CHECK(one.conjugates_added() == 1);
    CHECK(one.records()[1].gamma == doctest::Approx(-2.5));
    CHECK(one.records()[1].conductor == 5);

    // real zeros stay single
    ZeroSet real = ZeroSet::parse(
        R"({"sigma_max":0.5,"Q":10,"zeros":[{"beta":0.9,"gamma":0,"conductor":3,"real_character":true}]})");
    CHECK(real.records().size() == 1);

    CHECK_THROWS_WITH_AS(
        ZeroSet::parse(R"({"sigma_max":0.5,"Q":10,"zeros":[{"beta":0.9,"gamma":0}]})"),
        doctest::Contains("record 1"), std::invalid_argument);
    CHECK_THROWS_AS(
        ZeroSet::parse(R"({"sigma_max":0.1,"Q":10,"zeros":[{"beta":0.5,"gamma":1,"conductor":2}]})"),
        std::invalid_argument);   // sigma exceeds sigma_max
    CHECK_THROWS_AS(
        ZeroSet::parse(R"({"sigma_max":0.5,"Q":3,"zeros":[{"beta":0.6,"gamma":9,"conductor":2}]})"),
        std::invalid_argument);   // height exceeds Q
}

TEST_CASE("filtering sorts by decreasing real part") {
    std::vector<ZeroRecord> rs{{0.6, 0.0, 7, false, 1}, {0.9, 1.0, 3, false, 1},
                               {0.8, -4.0, 5, false, 1}};
    ZeroSet zs(std::move(rs), 100, 0.5, "");
    ZeroSet f = zs.filtered(100, 0.5);
    REQUIRE(f.records().size() >= 3);
    for (size_t i = 1; i < f.records().size(); i++)
        CHECK(f.records()[i - 1].beta >= f.records()[i].beta);
    CHECK(zs.filtered(4, 0.5).records().size() == 2);   // conductors 5 and 7 cut... 3 stays with both signs
}

TEST_CASE("scale selection") {
    ZeroSet empty({}, 10, 0.5, "");
    auto cert = scale_select(10000, 0.5, empty, 10);
    CHECK(cert.branch == ScaleBranch::unexceptional);
    CHECK(cert.T == doctest::Approx(10000.0));
    CHECK(cert.to_json().find("lambda1") != std::string::npos);

    ZeroSet exc({ZeroRecord{0.98, 0.0, 5, true, 1}}, 1000, 0.5, "");
    auto c2 = scale_select(1000, 0.5, exc, 10);
    CHECK(c2.branch == ScaleBranch::exceptional);
    REQUIRE(c2.exceptional_zero.has_value());
    CHECK(c2.exceptional_zero->conductor == 5);
    CHECK(c2.exceptional_lhs <= 1.0);

    // multiplicity 2 leading zero cannot be exceptional
    ZeroSet dbl({ZeroRecord{0.98, 0.0, 5, true, 2}}, 1000, 0.5, "");
    CHECK_THROWS_AS(scale_select(1000, 0.5, dbl, 10), std::runtime_error);
    CHECK_THROWS_AS(scale_select(1000, 1.5, exc, 10), std::invalid_argument);
}

TEST_CASE("page bound report") {
    auto ok = page_bound_check(ZeroRecord{0.9, 0, 5, true, 1}, 0.1);
    CHECK(ok.pass);
    CHECK(ok.sigma1 == doctest::Approx(0.1));
    CHECK(ok.threshold == doctest::Approx(0.02));
    auto bad = page_bound_check(ZeroRecord{1.0 - 1e-9, 0, 5, true, 1}, 0.1);
    CHECK_FALSE(bad.pass);
}

TEST_CASE("explicit formula degenerate case") {
    ZeroSet none({}, 10, 0.5, "");
    auto res = explicit_formula_check(principal_character(1), 10, none, 1);
    CHECK(std::isfinite(res.residual));
    CHECK(res.zeros_used == 0);
    // psi(10) = 3 log 2 + 2 log 3 + log 5 + log 7
    double expect = 3 * std::log(2.0) + 2 * std::log(3.0) + std::log(5.0) + std::log(7.0);
    CHECK(res.psi_sum == doctest::Approx(expect));
    CHECK(res.zero_sum == doctest::Approx(10.0));   // pole term only
}
