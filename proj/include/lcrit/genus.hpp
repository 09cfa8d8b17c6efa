#pragma once

#include "lcrit/quadforms.hpp"

namespace lcrit {

/// Genus character chi_{D0}(Q) for Q of discriminant D0*D.
///
/// Returns 0 when gcd(a, b, c, D0) > 1; otherwise (D0/r) for the first
/// value r = Q(u, v) coprime to D0 met while scanning the boundaries of
/// the boxes max(|u|, |v|) = 1, 2, 3, ... The value does not depend on
/// which r is found.
///
/// Throws PreconditionError if D0 is not a fundamental discriminant or
/// disc(Q) is not D0 times a discriminant.
int genus_character(i64 d0, BinaryQuadraticForm const & q);

/// chi_{-3} in closed form: (-3/a) if 3 does not divide a, else (-3/c).
/// Requires 3 | disc(Q) with disc(Q)/(-3) a discriminant and 3 not
/// dividing gcd(a, c).
int genus_character_m3(BinaryQuadraticForm const & q);

} // namespace lcrit
