#pragma once

/*
 * The vanishing criterion. For a dimension one level N with auxiliary
 * discriminant D0 and a good fundamental discriminant D < 0,
 *
 *   F(x) = sum of chi_{D0}(Q) over Q = [a,b,c] of discriminant D0*D
 *          with Q(x) > 0 > a and N | a
 *
 * is a finite exact sum at rational x, and L(E_D, 1) = 0 exactly when
 * F(x1) = F(x2) for the level's pair (x1, x2).
 */

#include <string>
#include <string_view>
#include <vector>

#include "lcrit/quadforms.hpp"
#include "lcrit/registry.hpp"

namespace lcrit {

struct FEvaluation
{
    i64 d = 0;
    RationalPoint x;
    i64 value = 0; ///< character-weighted sum
    i64 count = 0; ///< number of forms in the sum
};

/// Exact F_{N,D,D0}(x). Requires D0 fundamental, D a discriminant with
/// D*D0 > 0 and D*D0 not a square. D need not be fundamental.
FEvaluation f_sum(i64 level, i64 d0, i64 d, RationalPoint x);

/// Unweighted size of the form set behind f_sum.
i64 s_count(i64 level, i64 d0, i64 d, RationalPoint x);

enum class Vanishing
{
    LVanishes,
    LNonzero,
};

std::string_view to_string(Vanishing v);

struct VanishingVerdict
{
    i64 level = 0;
    i64 d = 0;
    Vanishing outcome = Vanishing::LNonzero;
    FEvaluation at_x1;
    FEvaluation at_x2;
    std::vector<std::string> notes;
};

/// Requires a registry level, D a negative fundamental discriminant that
/// meets the level's explicit condition, and |D*D0| not a square. Throws
/// PreconditionError naming the failed condition otherwise.
VanishingVerdict vanishing_verdict(i64 level, i64 d);

enum class Congruence
{
    ProvenNonCongruent,
    CongruentAssumingBSD,
};

std::string_view to_string(Congruence c);

struct CongruenceVerdict
{
    i64 n = 0;
    Congruence outcome = Congruence::ProvenNonCongruent;
    VanishingVerdict basis;
};

/// Level 32 criterion for n = 3 mod 8 with -n fundamental and 3n not a
/// square. Non-vanishing proves n is not congruent; vanishing means n is
/// congruent only under BSD.
CongruenceVerdict congruent_verdict(i64 n);

struct ParityResult
{
    i64 p = 0;
    i64 count = 0;
    bool odd = false;
    bool proven_noncongruent = false;
};

/// For a prime p = 3 mod 8, an odd number of forms in the level 32 set at
/// x = 1/3 is sufficient for L(E_p, 1) != 0.
ParityResult parity_test(i64 p);

enum class CubesOutcome
{
    FiniteProven,
    InfiniteAssumingBSD,
};

std::string_view to_string(CubesOutcome c);

struct CubesVerdict
{
    i64 n = 0;
    CubesOutcome outcome = CubesOutcome::FiniteProven;
    VanishingVerdict basis;
};

/// Level 27 criterion for x^3 + n*y^2 = 432 with -n fundamental,
/// n = 1 mod 3 and 4n not a square.
CubesVerdict cubes_verdict(i64 n);

} // namespace lcrit
