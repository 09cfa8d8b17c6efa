#include "lcrit/arith.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "lcrit/errors.hpp"

namespace lcrit {

namespace {

[[noreturn]] void overflow(char const * op, i64 x, i64 y)
{
    throw OverflowError(std::string("int64 overflow in ") + op + "("
                        + std::to_string(x) + ", " + std::to_string(y) + ")");
}

u64 mulmod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m)
{
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/* Jacobi symbol (a/n) for odd n >= 1 and 0 <= a < n. */
int jacobi(u64 a, u64 n)
{
    int result = 1;
    while (a != 0) {
        int const twos = std::countr_zero(a);
        a >>= twos;
        if ((twos & 1) && (n % 8 == 3 || n % 8 == 5))
            result = -result;
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

u64 magnitude(i64 x)
{
    return x < 0 ? u64(0) - static_cast<u64>(x) : static_cast<u64>(x);
}

} // namespace

i64 checked_add(i64 x, i64 y)
{
    i64 r;
    if (__builtin_add_overflow(x, y, &r))
        overflow("add", x, y);
    return r;
}

i64 checked_sub(i64 x, i64 y)
{
    i64 r;
    if (__builtin_sub_overflow(x, y, &r))
        overflow("sub", x, y);
    return r;
}

i64 checked_mul(i64 x, i64 y)
{
    i64 r;
    if (__builtin_mul_overflow(x, y, &r))
        overflow("mul", x, y);
    return r;
}

i64 checked_neg(i64 x)
{
    return checked_sub(0, x);
}

i64 isqrt(i64 n)
{
    if (n < 0)
        throw PreconditionError("isqrt of negative number " + std::to_string(n));
    auto r = static_cast<i64>(std::sqrt(static_cast<long double>(n)));
    // sqrtl is within one unit of the truth on 64-bit inputs; fix up exactly.
    while (r > 0 && static_cast<unsigned __int128>(r) * r > static_cast<unsigned __int128>(n))
        --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= static_cast<unsigned __int128>(n))
        ++r;
    return r;
}

bool is_square(i64 n)
{
    if (n < 0)
        return false;
    i64 const r = isqrt(n);
    return r * r == n;
}

int kronecker(i64 a, i64 n)
{
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;

    int result = 1;
    u64 m = magnitude(n);
    if (n < 0 && a < 0)
        result = -result;

    int const twos = std::countr_zero(m);
    if (twos > 0) {
        if ((a & 1) == 0)
            return 0;
        i64 const a8 = ((a % 8) + 8) % 8;
        if ((twos & 1) && (a8 == 3 || a8 == 5))
            result = -result;
        m >>= twos;
    }
    if (m == 1)
        return result;

    // m odd > 1: reduce a into [0, m)
    u64 am;
    if (a >= 0) {
        am = static_cast<u64>(a) % m;
    } else {
        u64 const r = magnitude(a) % m;
        am = r == 0 ? 0 : m - r;
    }
    return result * jacobi(am, m);
}

bool is_squarefree(i64 n)
{
    if (n == 0)
        return false;
    for (auto const & [p, e] : factorize(n))
        if (e > 1)
            return false;
    return true;
}

bool is_discriminant(i64 d)
{
    i64 const r = ((d % 4) + 4) % 4;
    return r == 0 || r == 1;
}

bool is_fundamental_discriminant(i64 d)
{
    if (d == 0 || d == 1)
        return false;
    i64 const r = ((d % 4) + 4) % 4;
    if (r == 1)
        return is_squarefree(d);
    if (r == 0) {
        i64 const m = d / 4;
        i64 const m4 = ((m % 4) + 4) % 4;
        return (m4 == 2 || m4 == 3) && is_squarefree(m);
    }
    return false;
}

bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    static constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : small) {
        if (n % p == 0)
            return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses are deterministic for n < 3.3e24.
    for (u64 a : small) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<i64> primes_up_to(i64 n)
{
    std::vector<i64> primes;
    if (n < 2)
        return primes;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (i64 p = 2; p <= n; ++p) {
        if (composite[p])
            continue;
        primes.push_back(p);
        for (i64 k = p * p; k <= n; k += p)
            composite[k] = true;
    }
    return primes;
}

std::vector<std::pair<i64, int>> factorize(i64 n)
{
    if (n == 0)
        throw PreconditionError("factorize(0)");
    u64 m = magnitude(n);
    std::vector<std::pair<i64, int>> out;
    auto strip = [&](u64 p) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e)
            out.emplace_back(static_cast<i64>(p), e);
    };
    strip(2);
    strip(3);
    for (u64 p = 5; p <= m / p; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (m > 1)
        out.emplace_back(static_cast<i64>(m), 1);
    return out;
}

std::vector<i64> divisors(i64 n)
{
    if (n < 1)
        throw PreconditionError("divisors requires n >= 1, got " + std::to_string(n));
    std::vector<i64> divs{1};
    for (auto const & [p, e] : factorize(n)) {
        std::size_t const base = divs.size();
        i64 pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace lcrit
