#include "lcrit/oracle.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>
#include <numeric>

#include "lcrit/errors.hpp"

namespace lcrit {

namespace {

/* Exponents and signs of prod_{n>=1} (1 - q^{dn}) up to q^limit:
 * sum over k of (-1)^k q^{d k(3k-1)/2}, k = 0, 1, -1, 2, -2, ... */
std::vector<std::pair<i64, int>> pentagonal_terms(i64 d, i64 limit)
{
    std::vector<std::pair<i64, int>> out{{0, 1}};
    for (i64 k = 1;; ++k) {
        i64 const g1 = d * (k * (3 * k - 1) / 2);
        i64 const g2 = d * (k * (3 * k + 1) / 2);
        if (g1 > limit)
            break;
        int const sign = (k % 2 == 0) ? 1 : -1;
        out.emplace_back(g1, sign);
        if (g2 <= limit)
            out.emplace_back(g2, sign);
    }
    return out;
}

i64 mod(i64 x, i64 p)
{
    i64 const r = x % p;
    return r < 0 ? r + p : r;
}

/* Number of affine points of the model over F_p. */
i64 affine_points(CurveModel const & e, i64 p)
{
    auto const & [a1, a2, a3, a4, a6] = e.a;
    if (p == 2) {
        i64 count = 0;
        for (i64 x = 0; x < 2; ++x)
            for (i64 y = 0; y < 2; ++y)
                if (mod(y * y + a1 * x * y + a3 * y - (x * x * x + a2 * x * x + a4 * x + a6), 2) == 0)
                    ++count;
        return count;
    }
    // Completing the square: (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.
    i64 const b2 = mod(a1 * a1 + 4 * a2, p);
    i64 const b4 = mod(2 * a4 + a1 * a3, p);
    i64 const b6 = mod(a3 * a3 + 4 * a6, p);
    std::vector<signed char> chi(static_cast<std::size_t>(p), -1);
    chi[0] = 0;
    for (i64 y = 1; y <= p / 2; ++y)
        chi[static_cast<std::size_t>(y * y % p)] = 1;
    i64 count = 0;
    for (i64 x = 0; x < p; ++x) {
        i64 f = (4 * x + b2) % p;
        f = (f * x + 2 * b4) % p;
        f = (f * x + b6) % p;
        count += 1 + chi[static_cast<std::size_t>(f)];
    }
    return count;
}

} // namespace

i64 CurveModel::discriminant() const
{
    auto const & [a1, a2, a3, a4, a6] = a;
    auto mul = [](i64 x, i64 y) { return checked_mul(x, y); };
    auto add = [](i64 x, i64 y) { return checked_add(x, y); };
    i64 const b2 = add(mul(a1, a1), mul(4, a2));
    i64 const b4 = add(mul(2, a4), mul(a1, a3));
    i64 const b6 = add(mul(a3, a3), mul(4, a6));
    i64 const b8 = add(add(add(mul(mul(a1, a1), a6), mul(mul(4, a2), a6)), -mul(mul(a1, a3), a4)),
                       add(mul(a2, mul(a3, a3)), -mul(a4, a4)));
    i64 disc = -mul(mul(b2, b2), b8);
    disc = add(disc, -mul(8, mul(b4, mul(b4, b4))));
    disc = add(disc, -mul(27, mul(b6, b6)));
    disc = add(disc, mul(9, mul(b2, mul(b4, b6))));
    return disc;
}

CoefficientSeries::CoefficientSeries(i64 level, std::vector<i64> coefficients_from_1)
    : level_(level)
{
    if (!coefficients_from_1.empty() && coefficients_from_1.front() != 1)
        throw DataError("coefficient series is not normalized (a_1 = "
                        + std::to_string(coefficients_from_1.front()) + ")");
    terms_.reserve(coefficients_from_1.size() + 1);
    terms_.insert(terms_.end(), coefficients_from_1.begin(), coefficients_from_1.end());
}

CoefficientSeries eta_coefficients(i64 level, EtaQuotient const & eta, i64 max_n)
{
    if (max_n < 1)
        throw PreconditionError("need at least one coefficient");
    if (max_n > 100'000'000)
        throw PreconditionError("coefficient count " + std::to_string(max_n) + " too large");
    i64 weight_shift = 0;
    for (auto const & [d, e] : eta.factors) {
        if (d < 1)
            throw DataError("eta factor with d < 1");
        weight_shift = checked_add(weight_shift, checked_mul(d, e));
    }
    if (weight_shift % 24 != 0 || weight_shift < 0)
        throw DataError("eta quotient has non-integral leading q-power");
    i64 const shift = weight_shift / 24;

    // Series in q of prod (q^d; q^d)_inf^e, truncated at q^(max_n - shift).
    i64 const limit = max_n - shift;
    std::vector<i64> s(static_cast<std::size_t>(std::max<i64>(limit, -1) + 1), 0);
    if (limit >= 0)
        s[0] = 1;
    for (auto const & [d, e] : eta.factors) {
        if (limit < 0)
            break;
        auto const terms = pentagonal_terms(d, limit);
        for (int rep = 0; rep < std::abs(e); ++rep) {
            if (e > 0) {
                // Multiply in place, high to low.
                for (i64 i = limit; i >= 0; --i) {
                    i64 acc = 0;
                    for (auto const & [g, sign] : terms) {
                        if (g > i)
                            break;
                        acc = checked_add(acc, sign * s[i - g]);
                    }
                    s[i] = acc;
                }
            } else {
                // Divide in place, low to high; the series has constant term 1.
                for (i64 i = 0; i <= limit; ++i) {
                    i64 acc = s[i];
                    for (std::size_t k = 1; k < terms.size(); ++k) {
                        auto const & [g, sign] = terms[k];
                        if (g > i)
                            break;
                        acc = checked_sub(acc, sign * s[i - g]);
                    }
                    s[i] = acc;
                }
            }
        }
    }

    std::vector<i64> coeffs(static_cast<std::size_t>(max_n), 0);
    for (i64 n = std::max<i64>(shift, 1); n <= max_n; ++n)
        coeffs[n - 1] = s[n - shift];
    return CoefficientSeries(level, std::move(coeffs));
}

i64 reduction_ap(CurveModel const & curve, i64 p)
{
    if (p < 2 || !is_prime(static_cast<u64>(p)))
        throw PreconditionError(std::to_string(p) + " is not prime");
    return p + 1 - (1 + affine_points(curve, p));
}

i64 curve_ap(CurveModel const & curve, i64 p)
{
    if (p < 2 || !is_prime(static_cast<u64>(p)))
        throw PreconditionError(std::to_string(p) + " is not prime");
    if (curve.discriminant() % p == 0)
        throw PreconditionError("bad reduction at p = " + std::to_string(p));
    return reduction_ap(curve, p);
}

CoefficientSeries extend_multiplicatively(std::map<i64, i64> const & ap, i64 level, i64 max_n)
{
    if (max_n < 1)
        throw PreconditionError("need at least one coefficient");
    // Smallest prime factor sieve.
    std::vector<i64> spf(static_cast<std::size_t>(max_n) + 1, 0);
    for (i64 i = 2; i <= max_n; ++i) {
        if (spf[i])
            continue;
        for (i64 j = i; j <= max_n; j += i)
            if (!spf[j])
                spf[j] = i;
    }

    std::vector<i64> a(static_cast<std::size_t>(max_n) + 1, 0);
    a[1] = 1;
    for (i64 n = 2; n <= max_n; ++n) {
        i64 const p = spf[n];
        i64 pk = p;
        while ((n / pk) % p == 0)
            pk *= p;
        if (pk != n) {
            a[n] = checked_mul(a[pk], a[n / pk]);
            continue;
        }
        auto const it = ap.find(p);
        if (it == ap.end())
            throw PreconditionError("missing a_p for p = " + std::to_string(p));
        i64 const a_p = it->second;
        if (n == p)
            a[n] = a_p;
        else if (level % p == 0)
            a[n] = checked_mul(a_p, a[n / p]);
        else
            a[n] = checked_sub(checked_mul(a_p, a[n / p]), checked_mul(p, a[n / p / p]));
    }
    return CoefficientSeries(level, std::vector<i64>(a.begin() + 1, a.end()));
}

CoefficientSeries curve_coefficients(i64 level, CurveModel const & curve, i64 max_n)
{
    std::map<i64, i64> ap;
    for (i64 p : primes_up_to(max_n))
        ap[p] = reduction_ap(curve, p);
    return extend_multiplicatively(ap, level, max_n);
}

CoefficientSeries coefficients_for(CurveData const & data, i64 max_n)
{
    if (data.eta)
        return eta_coefficients(data.level, *data.eta, max_n);
    if (data.weierstrass)
        return curve_coefficients(data.level, *data.weierstrass, max_n);
    throw DataError("level " + std::to_string(data.level) + " has no coefficient source");
}

std::string_view to_string(OracleVerdict v)
{
    switch (v) {
    case OracleVerdict::Zero:
        return "zero";
    case OracleVerdict::Nonzero:
        return "nonzero";
    case OracleVerdict::Indeterminate:
        return "indeterminate";
    }
    return "?";
}

i64 twist_conductor(i64 level, i64 d)
{
    return checked_mul(level, checked_mul(d, d));
}

i64 default_terms(i64 level, i64 d)
{
    double const root = std::sqrt(static_cast<double>(twist_conductor(level, d)));
    return static_cast<i64>(std::ceil(6.0 * root));
}

LValueEstimate twisted_l_value(i64 level, i64 d, CoefficientSeries const & coeffs,
                               LValueConfig const & config)
{
    if (d >= 0 || !is_fundamental_discriminant(d))
        throw PreconditionError("D = " + std::to_string(d)
                                + " is not a negative fundamental discriminant");
    if (coeffs.level() != level)
        throw PreconditionError("coefficient series is for level " + std::to_string(coeffs.level()));

    LValueEstimate out;
    out.d = d;
    if (std::gcd(d, level) > 1)
        out.caveats.emplace_back("gcd(D, N) > 1: N*D^2 is only a decay scale, not the exact conductor");
    else if (kronecker(d, -level) == -1)
        out.caveats.emplace_back("root number -1: central value vanishes for sign reasons");

    double const root = std::sqrt(static_cast<double>(twist_conductor(level, d)));
    i64 const terms = config.terms.value_or(default_terms(level, d));
    if (terms < 1)
        throw PreconditionError("terms must be >= 1");
    out.terms_used = terms;
    if (terms > config.max_terms) {
        out.caveats.emplace_back("declined: " + std::to_string(terms) + " terms exceed the cap of "
                                 + std::to_string(config.max_terms));
        out.tail_bound = INFINITY;
        return out;
    }
    if (coeffs.size() < terms)
        throw PreconditionError("insufficient coefficients: have " + std::to_string(coeffs.size())
                                + ", need " + std::to_string(terms));

    double const decay = 2.0 * std::numbers::pi / root;
    double sum = 0.0;
    double magnitude = 0.0;
    for (i64 n = 1; n <= terms; ++n) {
        i64 const an = coeffs(n);
        if (an == 0)
            continue;
        int const chi = kronecker(d, n);
        if (chi == 0)
            continue;
        double const term = static_cast<double>(an * chi) / static_cast<double>(n)
                            * std::exp(-decay * static_cast<double>(n));
        sum += term;
        magnitude += std::abs(term);
    }
    out.value = 2.0 * sum;

    // |a_n / n| <= 1, so the tail is at most 2 * sum_{n > M} r^n.
    double const r = std::exp(-decay);
    double const tail = 2.0 * std::pow(r, static_cast<double>(terms + 1)) / -std::expm1(-decay);
    double const rounding = 2.0 * magnitude * DBL_EPSILON * static_cast<double>(terms);
    out.tail_bound = tail + rounding;

    double const abs_value = std::abs(out.value);
    if (abs_value + out.tail_bound < config.t_zero)
        out.verdict = OracleVerdict::Zero;
    else if (abs_value - out.tail_bound > config.t_nonzero)
        out.verdict = OracleVerdict::Nonzero;
    else
        out.verdict = OracleVerdict::Indeterminate;
    return out;
}

} // namespace lcrit
