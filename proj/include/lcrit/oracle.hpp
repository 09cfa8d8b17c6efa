#pragma once

/*
 * Independent check of the criterion: approximate L(E_D, 1) by the
 * exponentially weighted sum
 *
 *   L(E_D, 1) ~ 2 * sum_{n <= M} a_n (D/n) / n * exp(-2 pi n / sqrt(C)),
 *
 * C = N D^2, from the q-expansion coefficients a_n of the level's
 * weight 2 newform. Coefficients come either from an eta quotient or from
 * point counts on a Weierstrass model extended by the Hecke relations.
 */

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcrit/arith.hpp"

namespace lcrit {

/// prod over (d, e) of eta(d tau)^e.
struct EtaQuotient
{
    std::vector<std::pair<i64, int>> factors;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, coefficients in the
/// order [a1, a2, a3, a4, a6].
struct CurveModel
{
    std::array<i64, 5> a{};

    i64 discriminant() const;
};

/// Contents of one curve data file:
///   {"level": N, "eta": [[d, e], ...] | null,
///    "weierstrass": [a1, a2, a3, a4, a6] | null, "source": "..."}
struct CurveData
{
    i64 level = 0;
    std::optional<EtaQuotient> eta;
    std::optional<CurveModel> weierstrass;
    std::string source;
};

/// Parses and validates one curve data document. Throws DataError.
CurveData parse_curve_data(std::string_view json_text);

/// Curve data files found in <data_dir>/curves/*.json, keyed by level.
class CurveRegistry
{
  public:
    static CurveRegistry load(std::filesystem::path const & data_dir);

    void add(CurveData data);
    bool contains(i64 level) const;
    CurveData const & at(i64 level) const;
    std::vector<i64> levels() const;

  private:
    std::map<i64, CurveData> entries_;
};

/// LCRIT_DATA_DIR if set, else the explicit path if non-empty, else the
/// data directory of the source tree the library was built from.
std::filesystem::path resolve_data_dir(std::filesystem::path const & explicit_dir = {});

/// a_1 .. a_M of a normalized newform; a(n) is valid for 1 <= n <= size().
class CoefficientSeries
{
  public:
    CoefficientSeries() = default;
    CoefficientSeries(i64 level, std::vector<i64> coefficients_from_1);

    i64 level() const { return level_; }
    i64 size() const { return static_cast<i64>(terms_.size()) - 1; }
    i64 operator()(i64 n) const { return terms_.at(static_cast<std::size_t>(n)); }

    /// a_1 .. a_M as a plain list.
    std::vector<i64> terms() const { return {terms_.begin() + 1, terms_.end()}; }

  private:
    i64 level_ = 0;
    std::vector<i64> terms_{0};
};

/// q-expansion of an eta quotient up to q^M, expanding each eta(d tau)
/// with the pentagonal number theorem. The leading power
/// q^{sum d*e / 24} must be integral.
CoefficientSeries eta_coefficients(i64 level, EtaQuotient const & eta, i64 max_n);

/// a_p = p + 1 - #E(F_p) for a prime p of good reduction. Throws
/// PreconditionError if p is not prime or divides the model discriminant.
i64 curve_ap(CurveModel const & curve, i64 p);

/// p + 1 - #E~(F_p) counting every point of the reduction, singular or
/// not. Equals curve_ap at good primes, and 0, 1 or -1 at bad primes when
/// the model is minimal there.
i64 reduction_ap(CurveModel const & curve, i64 p);

/// Fills a_1 .. a_M from prime coefficients with
/// a_{p^{k+1}} = a_p a_{p^k} - p a_{p^{k-1}} (p not dividing N),
/// a_{p^k} = a_p^k (p | N) and multiplicativity. Throws PreconditionError
/// if a prime p <= M is missing.
CoefficientSeries extend_multiplicatively(std::map<i64, i64> const & ap, i64 level, i64 max_n);

/// Point counts at every prime p <= M extended by the Hecke relations.
CoefficientSeries curve_coefficients(i64 level, CurveModel const & curve, i64 max_n);

/// Eta expansion when the data has one, otherwise point counting.
CoefficientSeries coefficients_for(CurveData const & data, i64 max_n);

enum class OracleVerdict
{
    Zero,
    Nonzero,
    Indeterminate,
};

std::string_view to_string(OracleVerdict v);

struct LValueConfig
{
    double t_zero = 1e-3;
    double t_nonzero = 1e-2;
    i64 max_terms = 10'000'000;
    /// Overrides the default ceil(6 sqrt(C)) when set.
    std::optional<i64> terms;
};

struct LValueEstimate
{
    i64 d = 0;
    double value = 0.0;
    i64 terms_used = 0;
    double tail_bound = 0.0;
    OracleVerdict verdict = OracleVerdict::Indeterminate;
    std::vector<std::string> caveats;
};

/// C = N * D^2, checked.
i64 twist_conductor(i64 level, i64 d);

/// Default truncation ceil(6 sqrt(C)).
i64 default_terms(i64 level, i64 d);

/// Truncated central value with a rigorous truncation bound derived from
/// |a_n| <= n, plus a floating-point rounding allowance. Verdict Zero
/// needs |value| + tail < t_zero, Nonzero needs |value| - tail > t_nonzero.
/// Declines (Indeterminate) when the truncation exceeds max_terms; throws
/// PreconditionError when coeffs are shorter than the truncation.
LValueEstimate twisted_l_value(i64 level, i64 d, CoefficientSeries const & coeffs,
                               LValueConfig const & config = {});

} // namespace lcrit
