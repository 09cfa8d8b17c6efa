#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcrit/criterion.hpp"
#include "lcrit/errors.hpp"
#include "lcrit/quadforms.hpp"
#include "lcrit/registry.hpp"

using namespace lcrit;

TEST_CASE("registry covers the twelve levels")
{
    std::vector<i64> levels;
    for (auto const & row : all_levels())
        levels.push_back(row.level);
    CHECK(levels == std::vector<i64>{11, 14, 15, 17, 19, 20, 21, 24, 27, 32, 36, 49});
    CHECK(is_dimension_one_level(32));
    CHECK_FALSE(is_dimension_one_level(33));
    CHECK_THROWS_AS(level_data(33), PreconditionError);

    auto const & n32 = level_data(32);
    CHECK(n32.d0 == -3);
    CHECK(n32.x1 == RationalPoint(0, 1));
    CHECK(n32.x2 == RationalPoint(1, 3));
    CHECK(n32.condition_text() == "|D| ≡ 3 (mod 8)");
    auto const & n27 = level_data(27);
    CHECK(n27.d0 == -4);
    CHECK(n27.x2 == RationalPoint(1, 2));
}

TEST_CASE("table condition examples")
{
    CHECK(table_condition(32, -11));
    CHECK_FALSE(table_condition(32, -7));
    CHECK(table_condition(27, -7));
    CHECK(table_condition(20, -43));
    CHECK(table_condition_violation(32, -7).value().find("|D| ≡ 3 (mod 8)") != std::string::npos);
    CHECK_THROWS_AS(table_condition(32, -12), PreconditionError);
}

TEST_CASE("f_sum examples")
{
    auto const a = f_sum(32, -3, -11, RationalPoint(1, 3));
    CHECK(a.value == 1);
    CHECK(a.count == 1);
    auto const b = f_sum(32, -3, -11, RationalPoint(0, 1));
    CHECK(b.value == 0);
    CHECK(b.count == 0);
    CHECK(f_sum(27, -4, -7, RationalPoint(1, 2)).value == 2);
    CHECK(s_count(32, -3, -11, RationalPoint(1, 3)) == 1);
    CHECK_THROWS_AS(f_sum(32, -5, -11, RationalPoint(0, 1)), PreconditionError);
    CHECK_THROWS_AS(f_sum(32, -3, 11, RationalPoint(0, 1)), PreconditionError);
    CHECK_THROWS_AS(f_sum(32, -3, -3, RationalPoint(0, 1)), PreconditionError);
}

TEST_CASE("empty sums are zero")
{
    for (i64 d = -3; d >= -400; --d) {
        if (!is_discriminant(d) || is_square(3 * -d))
            continue;
        for (auto x : {RationalPoint(0, 1), RationalPoint(1, 3)}) {
            auto const forms = enumerate_forms(32, -3 * d, x);
            if (forms.forms.empty()) {
                auto const f = f_sum(32, -3, d, x);
                REQUIRE(f.value == 0);
                REQUIRE(f.count == 0);
            }
        }
    }
}

TEST_CASE("verdict examples")
{
    auto const v = vanishing_verdict(32, -219);
    CHECK(v.outcome == Vanishing::LVanishes);
    CHECK(v.at_x1.value == 2);
    CHECK(v.at_x2.value == 2);
    CHECK(vanishing_verdict(32, -4219).outcome == Vanishing::LNonzero);
    CHECK(vanishing_verdict(27, -283).outcome == Vanishing::LVanishes);
    CHECK(to_string(Vanishing::LVanishes) == "L=0");

    CHECK(congruent_verdict(219).outcome == Congruence::CongruentAssumingBSD);
    CHECK(congruent_verdict(11).outcome == Congruence::ProvenNonCongruent);
    CHECK_THROWS_AS(congruent_verdict(10), PreconditionError);

    auto const p571 = parity_test(571);
    CHECK(p571.odd);
    CHECK(p571.proven_noncongruent);
    CHECK(parity_test(11).count == 1);
    CHECK_THROWS_AS(parity_test(5), PreconditionError);
    CHECK_THROWS_AS(parity_test(35), PreconditionError);

    CHECK(cubes_verdict(31).outcome == CubesOutcome::InfiniteAssumingBSD);
    CHECK(cubes_verdict(7).outcome == CubesOutcome::FiniteProven);
    CHECK(cubes_verdict(115).outcome == CubesOutcome::FiniteProven);
    CHECK_THROWS_AS(cubes_verdict(5), PreconditionError);
}

TEST_CASE("verdict preconditions name the violated rule")
{
    try {
        vanishing_verdict(32, -7);
        FAIL("expected a precondition error");
    } catch (PreconditionError const & e) {
        CHECK(std::string(e.what()).find("|D| ≡ 3 (mod 8) violated") != std::string::npos);
    }
    CHECK_THROWS_AS(vanishing_verdict(32, -12), PreconditionError);
    CHECK_THROWS_AS(vanishing_verdict(33, -11), PreconditionError);
    CHECK_THROWS_AS(vanishing_verdict(32, -3), PreconditionError);
}

TEST_CASE("even D at level 27 carries a note")
{
    auto const v = vanishing_verdict(27, -40);
    CHECK(!v.notes.empty());
}

TEST_CASE("F is congruent to #S mod 2 at level 32")
{
    for (i64 d = -4; d >= -2000; --d) {
        if (!is_fundamental_discriminant(d) || d % 3 == 0)
            continue;
        for (auto x : {RationalPoint(0, 1), RationalPoint(1, 3)}) {
            auto const f = f_sum(32, -3, d, x);
            REQUIRE_MESSAGE((f.value - f.count) % 2 == 0, "D=" << d << " x=" << x.str());
        }
    }
}

TEST_CASE("F(0) is even when |D| = 3 mod 8")
{
    int checked = 0;
    for (i64 d = -11; d >= -5000; --d) {
        if (!is_fundamental_discriminant(d) || -d % 8 != 3 || is_square(3 * -d))
            continue;
        REQUIRE_MESSAGE(f_sum(32, -3, d, RationalPoint(0, 1)).value % 2 == 0, "D=" << d);
        ++checked;
    }
    CHECK(checked > 300);
}

TEST_CASE("goodness rules imply the table condition")
{
    // Equality holds at nine levels. Elsewhere the table column admits
    // extra D, characterized per level:
    //   14  |D| = 7 (mod 8)
    //   15  3 | D
    //   24  every D, since the rules there exclude all of them
    for (auto const & row : all_levels()) {
        std::size_t table_only = 0;
        for (i64 d = -3; d >= -3000; --d) {
            if (!is_fundamental_discriminant(d) || d % 2 == 0)
                continue;
            bool const good = is_good(row.level, d);
            bool const table = table_condition(row.level, d);
            REQUIRE_MESSAGE(!(good && !table), "N=" << row.level << " D=" << d);
            if (table && !good) {
                ++table_only;
                switch (row.level) {
                case 14: REQUIRE(-d % 8 == 7); break;
                case 15: REQUIRE(d % 3 == 0); break;
                case 24: break;
                default: FAIL("N=" << row.level << " D=" << d << " satisfies the table only");
                }
            }
            if (row.level == 24)
                REQUIRE_FALSE(good);
        }
        if (row.level == 14)
            CHECK(table_only == 134);
        if (row.level == 15)
            CHECK(table_only == 65);
        if (row.level == 24)
            CHECK(table_only == 115);
    }
    CHECK_THROWS_AS(is_good(32, -20), PreconditionError);
}

TEST_CASE("listed discriminants are non-invariant")
{
    for (auto const & row : all_levels()) {
        for (auto const & e : row.noninvariant_examples) {
            i64 const d = -e.m;
            if (!is_discriminant(d) || is_square(e.m * -row.d0))
                continue;
            auto const f1 = f_sum(row.level, row.d0, d, row.x1);
            auto const f2 = f_sum(row.level, row.d0, d, row.x2);
            REQUIRE_MESSAGE(f1.value != f2.value, "N=" << row.level << " m=" << e.m);
            if (e.underlined && is_fundamental_discriminant(d) && table_condition(row.level, d))
                REQUIRE(vanishing_verdict(row.level, d).outcome == Vanishing::LNonzero);
        }
    }
}
