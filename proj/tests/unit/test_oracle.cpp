#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lcrit/errors.hpp"
#include "lcrit/oracle.hpp"
#include "lcrit/registry.hpp"

using namespace lcrit;

namespace {

CurveRegistry const & curves()
{
    static CurveRegistry const registry = CurveRegistry::load(resolve_data_dir());
    return registry;
}

CurveModel const congruent_curve{{0, 0, 0, -1, 0}};

} // namespace

TEST_CASE("curve data covers every level")
{
    std::vector<i64> expected;
    for (auto const & row : all_levels())
        expected.push_back(row.level);
    CHECK(curves().levels() == expected);
    for (auto const & row : all_levels()) {
        auto const & data = curves().at(row.level);
        CHECK(data.weierstrass.has_value());
        CHECK(data.eta.has_value() == (row.coefficient_source == CoefficientSource::EtaQuotient));
        CHECK(!data.source.empty());
    }
}

TEST_CASE("eta expansion examples at level 32")
{
    auto const a = coefficients_for(curves().at(32), 30);
    CHECK(a(1) == 1);
    CHECK(a(2) == 0);
    CHECK(a(3) == 0);
    CHECK(a(4) == 0);
    CHECK(a(5) == -2);
    CHECK(a(9) == -3);
    CHECK(a(13) == 6);
    CHECK(a(25) == -1);
    CHECK(a(29) == -10);
}

TEST_CASE("point counting examples")
{
    CHECK(curve_ap(congruent_curve, 5) == -2);
    CHECK(curve_ap(congruent_curve, 3) == 0);
    CHECK_THROWS_AS(curve_ap(congruent_curve, 2), PreconditionError);
    CHECK_THROWS_AS(curve_ap(congruent_curve, 9), PreconditionError);
    CHECK(reduction_ap(congruent_curve, 5) == -2);
}

TEST_CASE("Hecke extension examples")
{
    auto const a = extend_multiplicatively({{2, 0}, {3, 0}, {5, -2}, {7, 0}, {11, 0}, {13, 6}, {17, 2}, {19, 0}, {23, 0}},
                                           32, 25);
    CHECK(a(1) == 1);
    CHECK(a(25) == -1);
    CHECK(a(10) == 0);
    CHECK(a(4) == 0);
    CHECK_THROWS_AS(extend_multiplicatively({{2, 0}}, 32, 5), PreconditionError);
}

TEST_CASE("eta and point-count coefficients agree for n <= 200")
{
    for (i64 level : {11, 14, 15, 20, 24, 27, 32, 36}) {
        auto const & data = curves().at(level);
        auto const eta = eta_coefficients(level, *data.eta, 200);
        auto const counted = curve_coefficients(level, *data.weierstrass, 200);
        for (i64 n = 1; n <= 200; ++n)
            REQUIRE_MESSAGE(eta(n) == counted(n), "N=" << level << " n=" << n);
    }
}

TEST_CASE("known prime coefficients of the point-count levels")
{
    struct Known
    {
        i64 level;
        std::vector<i64> ap; // p = 2, 3, 5, 7, 11, 13
    };
    for (auto const & k : {Known{17, {-1, 0, -2, 4, 0, -2}}, Known{19, {0, -2, 3, -1, 3, -4}},
                           Known{21, {-1, 1, -2, -1, 4, -2}}, Known{49, {1, 0, 0, 0, 4, 0}}}) {
        auto const a = coefficients_for(curves().at(k.level), 13);
        i64 const ps[] = {2, 3, 5, 7, 11, 13};
        for (std::size_t i = 0; i < 6; ++i)
            CHECK_MESSAGE(a(ps[i]) == k.ap[i], "N=" << k.level << " p=" << ps[i]);
    }
}

TEST_CASE("Hasse bound for p <= 10^4")
{
    for (auto const & row : all_levels()) {
        auto const a = coefficients_for(curves().at(row.level), 10000);
        for (i64 p : primes_up_to(10000)) {
            if (row.level % p == 0)
                REQUIRE(std::abs(a(p)) <= 1);
            else
                REQUIRE_MESSAGE(a(p) * a(p) <= 4 * p, "N=" << row.level << " p=" << p);
        }
    }
}

TEST_CASE("twisted L-value examples")
{
    auto const a32 = coefficients_for(curves().at(32), 20000);
    auto const a27 = coefficients_for(curves().at(27), 20000);
    CHECK(twisted_l_value(32, -219, a32).verdict == OracleVerdict::Zero);
    auto const e11 = twisted_l_value(32, -11, a32);
    CHECK(e11.verdict == OracleVerdict::Nonzero);
    CHECK(e11.value == doctest::Approx(0.79).epsilon(0.02));
    CHECK(e11.terms_used == default_terms(32, -11));
    CHECK(twisted_l_value(27, -31, a27).verdict == OracleVerdict::Zero);
    CHECK(twist_conductor(32, -11) == 32 * 121);
    CHECK(default_terms(32, -11) == static_cast<i64>(std::ceil(6 * std::sqrt(32.0 * 121))));
}

TEST_CASE("twisted L-value declines or refuses when it cannot be sure")
{
    auto const a32 = coefficients_for(curves().at(32), 100);
    CHECK_THROWS_AS(twisted_l_value(32, -4219, a32), PreconditionError);
    LValueConfig capped;
    capped.max_terms = 50;
    CHECK(twisted_l_value(32, -4219, a32, capped).verdict == OracleVerdict::Indeterminate);
}

TEST_CASE("refinement never flips a verdict")
{
    auto const a32 = coefficients_for(curves().at(32), 60000);
    for (i64 d : {-11, -19, -35, -219, -331, -371, -4219}) {
        std::optional<OracleVerdict> settled;
        for (i64 m = 10; m <= 60000; m *= 2) {
            LValueConfig config;
            config.terms = m;
            auto const est = twisted_l_value(32, d, a32, config);
            if (est.verdict == OracleVerdict::Indeterminate)
                continue;
            if (settled)
                REQUIRE_MESSAGE(*settled == est.verdict, "D=" << d << " M=" << m);
            settled = est.verdict;
        }
        CHECK(settled.has_value());
    }
}

TEST_CASE("curve data schema errors")
{
    CHECK_NOTHROW(parse_curve_data(R"({"level": 32, "eta": [[4, 2], [8, 2]], "weierstrass": null})"));
    CHECK_THROWS_AS(parse_curve_data("not json"), DataError);
    CHECK_THROWS_AS(parse_curve_data(R"({"eta": null, "weierstrass": [0,0,0,-1,0]})"), DataError);
    CHECK_THROWS_AS(parse_curve_data(R"({"level": 32, "eta": null, "weierstrass": null})"), DataError);
    CHECK_THROWS_AS(parse_curve_data(R"({"level": 32, "eta": [[3, 2]], "weierstrass": null})"), DataError);
    CHECK_THROWS_AS(parse_curve_data(R"({"level": 32, "eta": null, "weierstrass": [0, 0, 0, -1]})"), DataError);
    CHECK_THROWS_AS(parse_curve_data(R"({"level": 32, "eta": null, "weierstrass": [0,0,0,-1,0], "x": 1})"),
                    DataError);
    CHECK_THROWS_AS(parse_curve_data(R"({"level": "32", "eta": null, "weierstrass": [0,0,0,-1,0]})"), DataError);
}
