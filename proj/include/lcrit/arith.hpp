#pragma once

/*
 * Exact 64-bit integer primitives: Kronecker symbol, discriminant tests,
 * primality, factorization and integer square roots.
 *
 * Every operation here is pure. Arithmetic that could leave the int64
 * range goes through the checked_* helpers, which throw OverflowError
 * instead of wrapping.
 */

#include <cstdint>
#include <utility>
#include <vector>

namespace lcrit {

using i64 = std::int64_t;
using u64 = std::uint64_t;

i64 checked_add(i64 x, i64 y);
i64 checked_sub(i64 x, i64 y);
i64 checked_mul(i64 x, i64 y);
i64 checked_neg(i64 x);

/// Floor of the square root of n. Throws PreconditionError for n < 0.
i64 isqrt(i64 n);

bool is_square(i64 n);

/// Kronecker symbol (a/n), total on all pairs; returns -1, 0 or 1.
///
/// Conventions: (a/0) = 1 iff |a| = 1; (a/-1) = sign of a (1 for a = 0);
/// (a/2) = 0 for even a, 1 for a = +-1 mod 8 and -1 for a = +-3 mod 8;
/// completely multiplicative in n.
int kronecker(i64 a, i64 n);

bool is_squarefree(i64 n);

/// True iff d is the discriminant of a quadratic field: d = 1 mod 4 and
/// squarefree, or d = 4m with m squarefree and m = 2, 3 mod 4.
bool is_fundamental_discriminant(i64 d);

/// d = 0 or 1 mod 4 (any sign, including squares).
bool is_discriminant(i64 d);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

/// Sieve of Eratosthenes, primes p <= n.
std::vector<i64> primes_up_to(i64 n);

/// Prime factorization of |n| for n != 0, as (prime, exponent) pairs in
/// increasing prime order. Trial division.
std::vector<std::pair<i64, int>> factorize(i64 n);

/// All positive divisors of n >= 1 in increasing order.
std::vector<i64> divisors(i64 n);

} // namespace lcrit
