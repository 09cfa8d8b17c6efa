#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcrit/arith.hpp"
#include "lcrit/oracle.hpp"

namespace lcrit {

/// One line of scan output. verdict is "vanishes" when f_x1 == f_x2,
/// otherwise "nonzero".
struct ScanRow
{
    i64 d = 0;
    i64 f_x1 = 0;
    i64 f_x2 = 0;
    i64 count_x1 = 0;
    i64 count_x2 = 0;
    std::string verdict;
    std::optional<std::string> oracle_verdict;
    std::optional<double> oracle_value;

    bool operator==(ScanRow const &) const = default;
};

struct ScanOptions
{
    i64 level = 32;
    i64 from = -3; ///< first (largest) D, negative
    i64 to = -3;   ///< last (smallest) D, negative, to <= from
    bool good_only = false;
    unsigned workers = 0; ///< 0 = machine parallelism
    /// Oracle columns are filled when set; must cover default_terms at |to|.
    std::shared_ptr<CoefficientSeries const> oracle_coefficients;
    LValueConfig oracle_config;
};

/// Negative fundamental D in [to, from], descending, with |D*D0| not a
/// square, and meeting the level's condition when good_only is set.
std::vector<i64> scan_discriminants(i64 level, i64 from, i64 to, bool good_only);

/// F at both points of the level for one D, plus the oracle when
/// coefficients are given.
ScanRow compute_scan_row(i64 level, i64 d, CoefficientSeries const * oracle_coefficients = nullptr,
                         LValueConfig const & oracle_config = {});

/// Streams rows to sink in descending D order, independent of the worker
/// count. Rows before a failing D are delivered before the error is
/// rethrown.
void scan(ScanOptions const & options, std::function<void(ScanRow const &)> const & sink);

std::vector<ScanRow> scan_collect(ScanOptions const & options);

std::string csv_header(bool with_oracle);
std::string to_csv(ScanRow const & row, bool with_oracle);

/// One NDJSON object with the CSV field names.
std::string to_json_line(ScanRow const & row);
ScanRow scan_row_from_json(std::string_view line);

} // namespace lcrit
