#pragma once

/*
 * Per-level data for the twelve levels N with dim S_2(N) = 1: the
 * auxiliary discriminant D0, the evaluation pair (x1, x2), the explicit
 * good-discriminant condition, and the listed discriminants m = |D| at
 * which F(x1) != F(x2) (underlined entries are good fundamental D with
 * L(E_D, 1) != 0).
 */

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcrit/quadforms.hpp"

namespace lcrit {

enum class CoefficientSource
{
    EtaQuotient,
    CurveModel,
    UserSupplied,
};

std::string_view to_string(CoefficientSource s);

/// One conjunct of a level's good-discriminant condition, evaluated at
/// n = |D|: either n = 3 mod 8, or (symbol/n) == expected (or != when
/// negated).
struct ConditionClause
{
    enum class Kind
    {
        ThreeMod8,
        Kronecker,
    };

    Kind kind = Kind::ThreeMod8;
    i64 symbol = 0;
    int expected = 1;
    bool negated = false;
    std::string_view text;

    bool holds(i64 abs_d) const;
};

struct NonInvariantEntry
{
    i64 m;
    bool underlined;
};

struct LevelData
{
    i64 level;
    i64 d0;
    RationalPoint x1;
    RationalPoint x2;
    std::vector<ConditionClause> good_condition;
    std::vector<NonInvariantEntry> noninvariant_examples;
    CoefficientSource coefficient_source;

    std::string condition_text() const;
};

/// All twelve rows in increasing level order.
std::span<LevelData const> all_levels();

bool is_dimension_one_level(i64 level);

/// Throws PreconditionError for levels outside the registry.
LevelData const & level_data(i64 level);

/// First clause of the level's explicit condition that D fails, or
/// nullopt if D satisfies it. D must be a negative fundamental
/// discriminant.
std::optional<std::string> table_condition_violation(i64 level, i64 d);
bool table_condition(i64 level, i64 d);

/// The general goodness rules (1)-(4) for odd D:
///   (1) N not a square => (-4N/|D|) = 1
///   (2) 2 | N => |D| = 3 mod 8
///   (3) p = -1 mod 8, p | N => (-p/|D|) = -1
///   (4) p = 3 mod 8, p^r || N => (-p/|D|) = (-1)^(r+1)
/// Returns the first failing rule, or nullopt. D must be an odd negative
/// fundamental discriminant.
std::optional<std::string> goodness_violation(i64 level, i64 d);
bool is_good(i64 level, i64 d);

} // namespace lcrit
