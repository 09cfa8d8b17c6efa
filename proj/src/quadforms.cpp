#include "lcrit/quadforms.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "lcrit/errors.hpp"

namespace lcrit {

namespace {

i64 floor_div(i64 x, i64 y)
{
    i64 q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0)))
        --q;
    return q;
}

i64 ceil_div(i64 x, i64 y)
{
    return -floor_div(-x, y);
}

i64 parse_int(std::string_view s)
{
    i64 v = 0;
    auto const * first = s.data();
    auto const * last = s.data() + s.size();
    if (first != last && *first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last)
        throw PreconditionError("not an integer: '" + std::string(s) + "'");
    return v;
}

/* Divisors of n (n >= 1) by trial division against a prime table that
 * covers sqrt(n). Unordered. */
void divisors_with_table(i64 n, std::vector<i64> const & primes, std::vector<i64> & out)
{
    out.assign(1, 1);
    for (i64 p : primes) {
        if (p > n / p)
            break;
        if (n % p)
            continue;
        std::size_t const base = out.size();
        i64 pk = 1;
        while (n % p == 0) {
            n /= p;
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pk);
        }
    }
    if (n > 1) {
        std::size_t const base = out.size();
        for (std::size_t i = 0; i < base; ++i)
            out.push_back(out[i] * n);
    }
}

} // namespace

std::string to_string(BinaryQuadraticForm const & q)
{
    return "[" + std::to_string(q.a) + "," + std::to_string(q.b) + "," + std::to_string(q.c) + "]";
}

i64 discriminant(BinaryQuadraticForm const & q)
{
    return checked_sub(checked_mul(q.b, q.b), checked_mul(4, checked_mul(q.a, q.c)));
}

i64 evaluate(BinaryQuadraticForm const & q, i64 u, i64 v)
{
    i64 const au2 = checked_mul(q.a, checked_mul(u, u));
    i64 const buv = checked_mul(q.b, checked_mul(u, v));
    i64 const cv2 = checked_mul(q.c, checked_mul(v, v));
    return checked_add(checked_add(au2, buv), cv2);
}

i64 evaluate(BinaryQuadraticForm const & q, RationalPoint x)
{
    return evaluate(q, x.num(), x.den());
}

RationalPoint::RationalPoint(i64 p, i64 q)
{
    if (q == 0)
        throw PreconditionError("rational point with zero denominator");
    if (q < 0) {
        p = checked_neg(p);
        q = checked_neg(q);
    }
    i64 const g = std::gcd(p, q);
    p_ = p / g;
    q_ = q / g;
}

RationalPoint RationalPoint::parse(std::string_view text)
{
    auto const slash = text.find('/');
    if (slash == std::string_view::npos)
        return RationalPoint(parse_int(text), 1);
    return RationalPoint(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string RationalPoint::str() const
{
    if (q_ == 1)
        return std::to_string(p_);
    return std::to_string(p_) + "/" + std::to_string(q_);
}

void check_form_query(i64 level, i64 delta)
{
    if (level < 1)
        throw PreconditionError("level must be >= 1, got " + std::to_string(level));
    if (delta <= 0)
        throw PreconditionError("discriminant must be positive, got " + std::to_string(delta));
    if (!is_discriminant(delta))
        throw PreconditionError(std::to_string(delta) + " is not a discriminant (must be 0 or 1 mod 4)");
    if (is_square(delta))
        throw PreconditionError("discriminant " + std::to_string(delta) + " is a perfect square");
}

FormSet enumerate_forms(i64 level, i64 delta, RationalPoint x)
{
    check_form_query(level, delta);
    i64 const p = x.num();
    i64 const q = x.den();
    i64 const target = checked_mul(delta, checked_mul(q, q));
    i64 const tmax = isqrt(target);

    FormSet out{level, delta, x, {}};
    // (target - t^2)/4 / level is what gets factored.
    auto const primes = primes_up_to(isqrt(target / 4 / level) + 1);
    std::vector<i64> divs;

    // target is 0 or 1 mod 4, so 4 | target - t^2 iff t = target mod 2.
    i64 const t_start = ((tmax - target) % 2 == 0) ? -tmax : -tmax + 1;
    for (i64 t = t_start; t <= tmax; t += 2) {
        i64 const rest = (target - t * t) / 4;
        if (rest <= 0 || rest % level != 0)
            continue;
        i64 const cofactor = rest / level;
        divisors_with_table(cofactor, primes, divs);
        for (i64 k : divs) {
            i64 const big_a = level * k;
            i64 const m = cofactor / k;
            i64 const bq = checked_add(t, checked_mul(2, checked_mul(big_a, p)));
            if (bq % q != 0)
                continue;
            i64 const b = bq / q;
            i64 const num = checked_sub(delta, checked_mul(b, b));
            if (num % (4 * big_a) != 0)
                continue;
            BinaryQuadraticForm const form{-big_a, b, num / (4 * big_a)};
            i64 const value = evaluate(form, x);
            if (value != m || value <= 0)
                throw Error("enumeration identity failed for " + to_string(form));
            out.forms.push_back(form);
        }
    }
    std::sort(out.forms.begin(), out.forms.end());
    return out;
}

FormSet enumerate_forms_bruteforce(i64 level, i64 delta, RationalPoint x, i64 slack)
{
    check_form_query(level, delta);
    if (slack < 1)
        throw PreconditionError("slack must be >= 1");
    i64 const p = x.num();
    i64 const q = x.den();
    i64 const box_a = checked_mul(slack, checked_mul(delta, checked_mul(q, q)));
    i64 const box_t = checked_add(checked_mul(checked_mul(slack, q), isqrt(delta)), q);

    FormSet out{level, delta, x, {}};
    for (i64 a = -level; a >= -box_a; a -= level) {
        i64 const shift = checked_mul(2, checked_mul(a, p));
        i64 const b_lo = ceil_div(checked_sub(-box_t, shift), q);
        i64 const b_hi = floor_div(checked_sub(box_t, shift), q);
        for (i64 b = b_lo; b <= b_hi; ++b) {
            i64 const num = checked_sub(checked_mul(b, b), delta);
            if (num % (4 * a) != 0)
                continue;
            BinaryQuadraticForm const form{a, b, num / (4 * a)};
            if (evaluate(form, x) > 0)
                out.forms.push_back(form);
        }
    }
    std::sort(out.forms.begin(), out.forms.end());
    return out;
}

} // namespace lcrit
