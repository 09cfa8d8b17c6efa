#include "lcrit/registry.hpp"

#include <algorithm>
#include <string>

#include "lcrit/errors.hpp"

namespace lcrit {

namespace {

using Clause = ConditionClause;

Clause three_mod_8()
{
    return {Clause::Kind::ThreeMod8, 0, 0, false, "|D| ≡ 3 (mod 8)"};
}

Clause symbol_is(i64 symbol, int expected, std::string_view text)
{
    return {Clause::Kind::Kronecker, symbol, expected, false, text};
}

Clause symbol_is_not(i64 symbol, int excluded, std::string_view text)
{
    return {Clause::Kind::Kronecker, symbol, excluded, true, text};
}

std::vector<NonInvariantEntry> entries(std::initializer_list<i64> signed_m)
{
    // Negative numbers mark underlined entries.
    std::vector<NonInvariantEntry> out;
    for (i64 m : signed_m)
        out.push_back({m < 0 ? -m : m, m < 0});
    return out;
}

std::vector<LevelData> build_registry()
{
    using CS = CoefficientSource;
    std::vector<LevelData> rows;
    rows.push_back({11, -3, {0, 1}, {1, 3},
                    {symbol_is(-11, 1, "(-11/|D|) = 1")},
                    entries({4, 11, 12, -15, 16, 20, -23, 27, -31, 44, 48}),
                    CS::EtaQuotient});
    rows.push_back({14, -3, {0, 1}, {1, 2},
                    {symbol_is(-56, 1, "(-4·14/|D|) = 1")},
                    entries({-19, 20, 24, 27, 35, 40, 52, 56, -59, 68}),
                    CS::EtaQuotient});
    rows.push_back({15, -4, {0, 1}, {1, 3},
                    {symbol_is(5, 1, "(5/|D|) = 1"), symbol_is_not(-3, -1, "(-3/|D|) ≠ -1")},
                    entries({15, 16, -19, 24, -31, -39, 40, -51, 55, 60}),
                    CS::EtaQuotient});
    rows.push_back({17, -7, {0, 1}, {1, 2},
                    {symbol_is(-68, 1, "(-4·17/|D|) = 1")},
                    entries({-3, -11, 20, -23, 24, 28, -31, 40, 48, 51, 63}),
                    CS::CurveModel});
    rows.push_back({19, -4, {0, 1}, {1, 2},
                    {symbol_is(-19, 1, "(-19/|D|) = 1")},
                    entries({-7, -11, 19, -20, -24, 28, -35, 36, -39, 43, 44}),
                    CS::CurveModel});
    rows.push_back({20, -3, {0, 1}, {1, 2},
                    {three_mod_8(), symbol_is(-20, 1, "(-20/|D|) = 1")},
                    entries({27, 35, -43, -67, -83, -107, 115, -123}),
                    CS::EtaQuotient});
    rows.push_back({21, -19, {0, 1}, {1, 2},
                    {symbol_is(-7, -1, "(-7/|D|) = -1"), symbol_is(-3, 1, "(-3/|D|) = 1")},
                    entries({-3, 7, -24, 27, 28, -31, -40, 48, -52, 63}),
                    CS::CurveModel});
    rows.push_back({24, -11, {1, 2}, {1, 3},
                    {three_mod_8(), symbol_is(-24, 1, "(-24/|D|) = 1")},
                    entries({-3, 27, -35, -51, -59, 75, -83, 99, -107, -123}),
                    CS::EtaQuotient});
    rows.push_back({27, -4, {0, 1}, {1, 2},
                    {symbol_is(-3, 1, "(-3/|D|) = 1")},
                    entries({-7, -19, 28, 36, -40, -43, -52, -55, 64, -67, 76}),
                    CS::EtaQuotient});
    rows.push_back({32, -3, {0, 1}, {1, 3},
                    {three_mod_8()},
                    entries({-11, 12, -19, -35, -43, 48, -51, -59, -67, 75, -83}),
                    CS::EtaQuotient});
    rows.push_back({36, -11, {0, 1}, {1, 2},
                    {three_mod_8(), symbol_is(-3, -1, "(-3/|D|) = -1")},
                    entries({27, -35, -59, -83, 99, -107, -131, -155, 171}),
                    CS::EtaQuotient});
    rows.push_back({49, -3, {0, 1}, {1, 7},
                    {symbol_is(-7, -1, "(-7/|D|) = -1")},
                    entries({-19, -20, 27, -31, -40, -47, 48, -55, -59, -68, 75}),
                    CS::CurveModel});
    return rows;
}

void require_negative_fundamental(i64 d)
{
    if (d >= 0 || !is_fundamental_discriminant(d))
        throw PreconditionError("D = " + std::to_string(d)
                                + " is not a negative fundamental discriminant");
}

} // namespace

std::string_view to_string(CoefficientSource s)
{
    switch (s) {
    case CoefficientSource::EtaQuotient:
        return "eta-quotient";
    case CoefficientSource::CurveModel:
        return "curve-model";
    case CoefficientSource::UserSupplied:
        return "user-supplied";
    }
    return "?";
}

bool ConditionClause::holds(i64 abs_d) const
{
    if (kind == Kind::ThreeMod8)
        return abs_d % 8 == 3;
    bool const eq = kronecker(symbol, abs_d) == expected;
    return negated ? !eq : eq;
}

std::string LevelData::condition_text() const
{
    std::string out;
    for (auto const & clause : good_condition) {
        if (!out.empty())
            out += " and ";
        out += clause.text;
    }
    return out;
}

std::span<LevelData const> all_levels()
{
    static std::vector<LevelData> const rows = build_registry();
    return rows;
}

bool is_dimension_one_level(i64 level)
{
    auto const rows = all_levels();
    return std::any_of(rows.begin(), rows.end(), [&](auto const & r) { return r.level == level; });
}

LevelData const & level_data(i64 level)
{
    for (auto const & row : all_levels())
        if (row.level == level)
            return row;
    throw PreconditionError("unknown level " + std::to_string(level)
                            + " (not a dimension one level)");
}

std::optional<std::string> table_condition_violation(i64 level, i64 d)
{
    auto const & row = level_data(level);
    require_negative_fundamental(d);
    for (auto const & clause : row.good_condition)
        if (!clause.holds(-d))
            return std::string(clause.text);
    return std::nullopt;
}

bool table_condition(i64 level, i64 d)
{
    return !table_condition_violation(level, d).has_value();
}

std::optional<std::string> goodness_violation(i64 level, i64 d)
{
    if (level < 1)
        throw PreconditionError("level must be >= 1");
    require_negative_fundamental(d);
    if (d % 2 == 0)
        throw PreconditionError("goodness is defined for odd D only, got D = " + std::to_string(d));
    i64 const n = -d;

    if (!is_square(level) && kronecker(checked_mul(-4, level), n) != 1)
        return "rule (1): (-4N/|D|) = 1";
    if (level % 2 == 0 && n % 8 != 3)
        return "rule (2): |D| ≡ 3 (mod 8)";
    for (auto const & [p, r] : factorize(level)) {
        if (p % 8 == 7 && kronecker(-p, n) != -1)
            return "rule (3): (-" + std::to_string(p) + "/|D|) = -1";
        if (p % 8 == 3) {
            int const want = (r % 2 == 0) ? -1 : 1;
            if (kronecker(-p, n) != want)
                return "rule (4): (-" + std::to_string(p) + "/|D|) = " + std::to_string(want);
        }
    }
    return std::nullopt;
}

bool is_good(i64 level, i64 d)
{
    return !goodness_violation(level, d).has_value();
}

} // namespace lcrit
