#include "lcrit/genus.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "lcrit/errors.hpp"

namespace lcrit {

int genus_character(i64 d0, BinaryQuadraticForm const & q)
{
    if (!is_fundamental_discriminant(d0))
        throw PreconditionError(std::to_string(d0) + " is not a fundamental discriminant");
    i64 const disc = discriminant(q);
    if (disc % d0 != 0 || !is_discriminant(disc / d0))
        throw PreconditionError("discriminant of " + to_string(q) + " is not "
                                + std::to_string(d0) + " times a discriminant");

    i64 const content = std::gcd(std::gcd(std::gcd(q.a, q.b), q.c), d0);
    if (content > 1)
        return 0;

    i64 const bound = std::abs(d0) + 2;
    for (i64 box = 1; box <= bound; ++box) {
        for (i64 u = -box; u <= box; ++u) {
            for (i64 v = -box; v <= box; ++v) {
                if (std::abs(u) != box && std::abs(v) != box)
                    continue;
                i64 const r = evaluate(q, u, v);
                if (r != 0 && std::gcd(r, d0) == 1)
                    return kronecker(d0, r);
            }
        }
    }
    throw Error("no represented value coprime to " + std::to_string(d0) + " found for "
                + to_string(q));
}

int genus_character_m3(BinaryQuadraticForm const & q)
{
    i64 const disc = discriminant(q);
    if (disc % 3 != 0 || !is_discriminant(disc / -3))
        throw PreconditionError("discriminant of " + to_string(q) + " is not -3 times a discriminant");
    if (q.a % 3 == 0 && q.c % 3 == 0)
        throw PreconditionError("3 divides both a and c in " + to_string(q));
    if (q.a % 3 != 0)
        return kronecker(-3, q.a);
    return kronecker(-3, q.c);
}

} // namespace lcrit
