#include "lcrit/criterion.hpp"

#include <numeric>
#include <string>

#include "lcrit/errors.hpp"
#include "lcrit/genus.hpp"

namespace lcrit {

namespace {

i64 pair_discriminant(i64 d0, i64 d)
{
    if (!is_fundamental_discriminant(d0))
        throw PreconditionError("D0 = " + std::to_string(d0) + " is not a fundamental discriminant");
    if (!is_discriminant(d))
        throw PreconditionError("D = " + std::to_string(d) + " is not a discriminant");
    i64 const delta = checked_mul(d, d0);
    if (delta <= 0)
        throw PreconditionError("D*D0 must be positive");
    if (is_square(delta))
        throw PreconditionError("|D*D0| = " + std::to_string(delta) + " is a perfect square");
    return delta;
}

} // namespace

std::string_view to_string(Vanishing v)
{
    return v == Vanishing::LVanishes ? "L=0" : "L!=0";
}

std::string_view to_string(Congruence c)
{
    return c == Congruence::ProvenNonCongruent ? "NOT congruent (unconditional)"
                                               : "congruent assuming BSD";
}

std::string_view to_string(CubesOutcome c)
{
    return c == CubesOutcome::FiniteProven ? "finitely many rational points (unconditional)"
                                           : "infinitely many rational points assuming BSD";
}

FEvaluation f_sum(i64 level, i64 d0, i64 d, RationalPoint x)
{
    i64 const delta = pair_discriminant(d0, d);
    auto const set = enumerate_forms(level, delta, x);
    FEvaluation out{d, x, 0, static_cast<i64>(set.forms.size())};
    for (auto const & form : set.forms)
        out.value += genus_character(d0, form);
    return out;
}

i64 s_count(i64 level, i64 d0, i64 d, RationalPoint x)
{
    i64 const delta = pair_discriminant(d0, d);
    return static_cast<i64>(enumerate_forms(level, delta, x).forms.size());
}

VanishingVerdict vanishing_verdict(i64 level, i64 d)
{
    auto const & row = level_data(level);
    if (auto violated = table_condition_violation(level, d))
        throw PreconditionError(*violated + " violated (level " + std::to_string(level)
                                + " condition: " + row.condition_text() + ")");

    VanishingVerdict out;
    out.level = level;
    out.d = d;
    out.at_x1 = f_sum(level, row.d0, d, row.x1);
    out.at_x2 = f_sum(level, row.d0, d, row.x2);
    out.outcome = out.at_x1.value == out.at_x2.value ? Vanishing::LVanishes : Vanishing::LNonzero;
    if (d % 2 == 0)
        out.notes.emplace_back("even D: goodness rules cover odd D only; accepted via the level's explicit condition");
    if (std::gcd(d, level) > 1)
        out.notes.emplace_back("gcd(D, N) > 1: outside the coprime case of the criterion");
    return out;
}

CongruenceVerdict congruent_verdict(i64 n)
{
    if (n <= 0)
        throw PreconditionError("n must be positive");
    if (n % 8 != 3)
        throw PreconditionError("n ≡ 3 (mod 8) violated for n = " + std::to_string(n));
    if (!is_fundamental_discriminant(-n))
        throw PreconditionError("-n = " + std::to_string(-n) + " is not a fundamental discriminant");
    if (is_square(checked_mul(3, n)))
        throw PreconditionError("3n is a perfect square");
    CongruenceVerdict out;
    out.n = n;
    out.basis = vanishing_verdict(32, -n);
    out.outcome = out.basis.outcome == Vanishing::LNonzero ? Congruence::ProvenNonCongruent
                                                           : Congruence::CongruentAssumingBSD;
    return out;
}

ParityResult parity_test(i64 p)
{
    if (p <= 0 || !is_prime(static_cast<u64>(p)))
        throw PreconditionError(std::to_string(p) + " is not prime");
    if (p % 8 != 3)
        throw PreconditionError("p ≡ 3 (mod 8) violated for p = " + std::to_string(p));
    ParityResult out;
    out.p = p;
    out.count = s_count(32, -3, -p, RationalPoint(1, 3));
    out.odd = out.count % 2 != 0;
    out.proven_noncongruent = out.odd;
    return out;
}

CubesVerdict cubes_verdict(i64 n)
{
    if (n <= 0)
        throw PreconditionError("n must be positive");
    if (!is_fundamental_discriminant(-n))
        throw PreconditionError("-n = " + std::to_string(-n) + " is not a fundamental discriminant");
    if (n % 3 != 1)
        throw PreconditionError("n ≡ 1 (mod 3) violated for n = " + std::to_string(n));
    if (is_square(checked_mul(4, n)))
        throw PreconditionError("4n is a perfect square");
    CubesVerdict out;
    out.n = n;
    out.basis = vanishing_verdict(27, -n);
    out.outcome = out.basis.outcome == Vanishing::LNonzero ? CubesOutcome::FiniteProven
                                                           : CubesOutcome::InfiniteAssumingBSD;
    return out;
}

} // namespace lcrit
