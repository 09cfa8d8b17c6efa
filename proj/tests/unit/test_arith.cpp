#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <numeric>
#include <random>

#include "lcrit/arith.hpp"
#include "lcrit/errors.hpp"

using namespace lcrit;

TEST_CASE("kronecker examples")
{
    CHECK(kronecker(7, 1) == 1);
    CHECK(kronecker(-3, 5) == -1);
    CHECK(kronecker(-11, 15) == 1);
    CHECK(kronecker(2, 0) == 0);
    CHECK(kronecker(1, 0) == 1);
    CHECK(kronecker(-1, 0) == 1);
    CHECK(kronecker(5, -1) == 1);
    CHECK(kronecker(-5, -1) == -1);
    CHECK(kronecker(0, -1) == 1);
    CHECK(kronecker(4, 2) == 0);
    CHECK(kronecker(7, 2) == 1);
    CHECK(kronecker(9, 2) == 1);
    CHECK(kronecker(3, 2) == -1);
    CHECK(kronecker(5, 2) == -1);
    CHECK(kronecker(-3, -2) == 1);
}

// (a/0) = 1 for |a| = 1, so multiplicativity is over nonzero m, n.
TEST_CASE("kronecker is completely multiplicative in the lower argument")
{
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<i64> mn(-10000, 10000);
    std::uniform_int_distribution<i64> as(-200, 200);
    for (int i = 0; i < 200000; ++i) {
        i64 const a = as(rng);
        i64 const m = mn(rng);
        i64 const n = mn(rng);
        if (m == 0 || n == 0)
            continue;
        REQUIRE(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
    }
    for (i64 a : {-4, -3, -1, 0, 1, 2, 5}) {
        for (i64 m = -60; m <= 60; ++m)
            for (i64 n = -60; n <= 60; ++n)
                if (m != 0 && n != 0)
                    REQUIRE_MESSAGE(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n), a << " " << m << " " << n);
    }
}

TEST_CASE("quadratic reciprocity for odd coprime m, n <= 1000")
{
    for (i64 m = 1; m <= 1000; m += 2) {
        for (i64 n = 1; n <= 1000; n += 2) {
            if (std::gcd(m, n) != 1)
                continue;
            int const sign = (((m - 1) / 2) * ((n - 1) / 2)) % 2 == 0 ? 1 : -1;
            REQUIRE(kronecker(m, n) * kronecker(n, m) == sign);
        }
    }
}

TEST_CASE("kronecker agrees with Euler's criterion at odd primes")
{
    for (i64 p : primes_up_to(200)) {
        if (p == 2)
            continue;
        for (i64 a = -50; a <= 50; ++a) {
            i64 r = ((a % p) + p) % p;
            i64 pow = 1;
            for (i64 e = 0; e < (p - 1) / 2; ++e)
                pow = pow * r % p;
            int const expected = r == 0 ? 0 : (pow == 1 ? 1 : -1);
            REQUIRE(kronecker(a, p) == expected);
        }
    }
}

TEST_CASE("isqrt examples and property")
{
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(33) == 5);
    CHECK(isqrt(297) == 17);
    i64 const big = std::numeric_limits<i64>::max();
    i64 const r = isqrt(big);
    CHECK(r == 3037000499);
    CHECK_THROWS_AS(isqrt(-1), PreconditionError);

    std::mt19937_64 rng(2);
    std::uniform_int_distribution<i64> any(0, big);
    for (int i = 0; i < 100000; ++i) {
        i64 const n = i % 2 ? any(rng) : any(rng) % 1000000;
        i64 const s = isqrt(n);
        REQUIRE(static_cast<__int128>(s) * s <= n);
        REQUIRE(static_cast<__int128>(s + 1) * (s + 1) > n);
    }
    for (i64 k = 0; k < 3037000499; k += 99991) {
        REQUIRE(isqrt(k * k) == k);
        if (k > 0)
            REQUIRE(isqrt(k * k - 1) == k - 1);
    }
}

TEST_CASE("is_square")
{
    CHECK(is_square(0));
    CHECK(is_square(1));
    CHECK(is_square(9));
    CHECK_FALSE(is_square(33));
    CHECK_FALSE(is_square(-4));
}

namespace {

bool is_discriminant_by_definition(i64 d)
{
    i64 const r = ((d % 4) + 4) % 4;
    return d != 0 && (r == 0 || r == 1);
}

/// Discriminant not of the form f^2 * d' with f > 1 and d' a discriminant.
bool is_fundamental_by_definition(i64 d)
{
    if (d == 1 || !is_discriminant_by_definition(d))
        return false;
    for (i64 f = 2; f * f <= std::abs(d); ++f) {
        if (d % (f * f) == 0 && is_discriminant_by_definition(d / (f * f)))
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("fundamental discriminant examples")
{
    CHECK(is_fundamental_discriminant(-3));
    CHECK(is_fundamental_discriminant(-11));
    CHECK(is_fundamental_discriminant(-4));
    CHECK(is_fundamental_discriminant(12));
    CHECK_FALSE(is_fundamental_discriminant(9));
    CHECK_FALSE(is_fundamental_discriminant(1));
    CHECK_FALSE(is_fundamental_discriminant(0));
    CHECK_FALSE(is_fundamental_discriminant(-12));
}

TEST_CASE("is_fundamental_discriminant matches the definition for |d| <= 10^4")
{
    for (i64 d = -10000; d <= 10000; ++d)
        REQUIRE_MESSAGE(is_fundamental_discriminant(d) == is_fundamental_by_definition(d), "d = " << d);
}

TEST_CASE("is_prime")
{
    CHECK(is_prime(571));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(561));
    CHECK(is_prime(2305843009213693951ULL));
    CHECK_FALSE(is_prime(3215031751ULL));
    auto const small = primes_up_to(100000);
    std::size_t k = 0;
    for (i64 n = 1; n <= 100000; ++n) {
        bool const listed = k < small.size() && small[k] == n;
        REQUIRE(is_prime(static_cast<u64>(n)) == listed);
        if (listed)
            ++k;
    }
}

TEST_CASE("divisors and factorize")
{
    CHECK(divisors(1) == std::vector<i64>{1});
    CHECK(divisors(12) == std::vector<i64>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(128) == std::vector<i64>{1, 2, 4, 8, 16, 32, 64, 128});
    auto const f = factorize(360);
    CHECK(f == std::vector<std::pair<i64, int>>{{2, 3}, {3, 2}, {5, 1}});
    for (i64 n = 1; n <= 3000; ++n) {
        std::vector<i64> brute;
        for (i64 d = 1; d <= n; ++d)
            if (n % d == 0)
                brute.push_back(d);
        REQUIRE(divisors(n) == brute);
    }
}

TEST_CASE("checked arithmetic signals overflow")
{
    i64 const big = std::numeric_limits<i64>::max();
    CHECK_THROWS_AS(checked_mul(big, 2), OverflowError);
    CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
    CHECK_THROWS_AS(checked_sub(std::numeric_limits<i64>::min(), 1), OverflowError);
    CHECK_THROWS_AS(checked_neg(std::numeric_limits<i64>::min()), OverflowError);
    CHECK(checked_mul(-3, 7) == -21);
}
