#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "lcrit/arith.hpp"

namespace lcrit {

/// Q(X, Y) = aX^2 + bXY + cY^2, written [a, b, c]. Ordering is
/// lexicographic in (a, b, c), which is the canonical order of FormSet.
struct BinaryQuadraticForm
{
    i64 a = 0;
    i64 b = 0;
    i64 c = 0;

    auto operator<=>(BinaryQuadraticForm const &) const = default;
};

std::string to_string(BinaryQuadraticForm const & q);

/// b^2 - 4ac, checked.
i64 discriminant(BinaryQuadraticForm const & q);

/// Q(u, v) = au^2 + buv + cv^2, checked.
i64 evaluate(BinaryQuadraticForm const & q, i64 u, i64 v);

/// Reduced fraction p/q with q >= 1.
class RationalPoint
{
  public:
    constexpr RationalPoint() = default;

    /// Normalizes sign and common factors; throws PreconditionError if q == 0.
    RationalPoint(i64 p, i64 q);

    /// Accepts "p/q" or an integer "p".
    static RationalPoint parse(std::string_view text);

    i64 num() const { return p_; }
    i64 den() const { return q_; }

    std::string str() const;

    bool operator==(RationalPoint const &) const = default;

  private:
    i64 p_ = 0;
    i64 q_ = 1;
};

/// Homogenized value Q(p, q) at x = p/q; its sign is the sign of Q(x).
i64 evaluate(BinaryQuadraticForm const & q, RationalPoint x);

/// Forms [a,b,c] of discriminant delta with a < 0, level | a and
/// Q(x) > 0, in canonical order.
struct FormSet
{
    i64 level = 1;
    i64 delta = 0;
    RationalPoint point;
    std::vector<BinaryQuadraticForm> forms;
};

/// Throws PreconditionError unless level >= 1 and delta is a positive,
/// non-square discriminant.
void check_form_query(i64 level, i64 delta);

/// Enumerates the FormSet for (level, delta, x).
///
/// With x = p/q, t = bq + 2ap, A = -a and m = Q(p, q) every member
/// satisfies delta*q^2 = t^2 + 4*A*m. The enumeration walks t over
/// |t| < q*sqrt(delta), factors (delta*q^2 - t^2)/4 and splits it as A*m
/// with level | A, then recovers b and c when they are integral.
FormSet enumerate_forms(i64 level, i64 delta, RationalPoint x);

/// Reference enumerator for tests: a direct loop over a in
/// [-slack*delta*q^2, -1] stepping by level and over b in the box
/// |bq + 2ap| <= slack*q*isqrt(delta) + q. Same preconditions and result
/// semantics as enumerate_forms.
FormSet enumerate_forms_bruteforce(i64 level, i64 delta, RationalPoint x, i64 slack);

} // namespace lcrit
