#include "lcrit/scan.hpp"

#include <cstdio>

#include <json.hpp>

#include "lcrit/criterion.hpp"
#include "lcrit/errors.hpp"
#include "lcrit/parallel.hpp"
#include "lcrit/registry.hpp"

namespace lcrit {

std::vector<i64> scan_discriminants(i64 level, i64 from, i64 to, bool good_only)
{
    auto const & row = level_data(level);
    if (from >= 0 || to >= 0)
        throw PreconditionError("scan bounds must be negative");
    if (to > from)
        throw PreconditionError("scan descends: need --from >= --to (e.g. --from -3 --to -250)");
    std::vector<i64> out;
    for (i64 d = from; d >= to; --d) {
        if (!is_fundamental_discriminant(d))
            continue;
        if (is_square(checked_mul(d, row.d0)))
            continue;
        if (good_only && !table_condition(level, d))
            continue;
        out.push_back(d);
    }
    return out;
}

ScanRow compute_scan_row(i64 level, i64 d, CoefficientSeries const * oracle_coefficients,
                         LValueConfig const & oracle_config)
{
    auto const & data = level_data(level);
    auto const f1 = f_sum(level, data.d0, d, data.x1);
    auto const f2 = f_sum(level, data.d0, d, data.x2);
    ScanRow row;
    row.d = d;
    row.f_x1 = f1.value;
    row.f_x2 = f2.value;
    row.count_x1 = f1.count;
    row.count_x2 = f2.count;
    row.verdict = f1.value == f2.value ? "vanishes" : "nonzero";
    if (oracle_coefficients) {
        auto const est = twisted_l_value(level, d, *oracle_coefficients, oracle_config);
        row.oracle_verdict = std::string(to_string(est.verdict));
        row.oracle_value = est.value;
    }
    return row;
}

void scan(ScanOptions const & options, std::function<void(ScanRow const &)> const & sink)
{
    auto const ds = scan_discriminants(options.level, options.from, options.to, options.good_only);
    auto const * coeffs = options.oracle_coefficients.get();
    ordered_parallel_for(
        ds.size(), options.workers,
        [&](std::size_t i) { return compute_scan_row(options.level, ds[i], coeffs, options.oracle_config); },
        [&](std::size_t, ScanRow const & row) { sink(row); });
}

std::vector<ScanRow> scan_collect(ScanOptions const & options)
{
    std::vector<ScanRow> rows;
    scan(options, [&](ScanRow const & r) { rows.push_back(r); });
    return rows;
}

std::string csv_header(bool with_oracle)
{
    std::string h = "D,f_x1,f_x2,count_x1,count_x2,verdict";
    if (with_oracle)
        h += ",oracle_verdict,oracle_value";
    return h;
}

std::string to_csv(ScanRow const & row, bool with_oracle)
{
    std::string line = std::to_string(row.d) + "," + std::to_string(row.f_x1) + ","
                       + std::to_string(row.f_x2) + "," + std::to_string(row.count_x1) + ","
                       + std::to_string(row.count_x2) + "," + row.verdict;
    if (with_oracle) {
        line += "," + row.oracle_verdict.value_or("");
        line += ",";
        if (row.oracle_value) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.12g", *row.oracle_value);
            line += buf;
        }
    }
    return line;
}

std::string to_json_line(ScanRow const & row)
{
    nlohmann::ordered_json j;
    j["D"] = row.d;
    j["f_x1"] = row.f_x1;
    j["f_x2"] = row.f_x2;
    j["count_x1"] = row.count_x1;
    j["count_x2"] = row.count_x2;
    j["verdict"] = row.verdict;
    if (row.oracle_verdict)
        j["oracle_verdict"] = *row.oracle_verdict;
    if (row.oracle_value)
        j["oracle_value"] = *row.oracle_value;
    return j.dump();
}

ScanRow scan_row_from_json(std::string_view line)
{
    try {
        auto const j = nlohmann::json::parse(line);
        ScanRow row;
        row.d = j.at("D").get<i64>();
        row.f_x1 = j.at("f_x1").get<i64>();
        row.f_x2 = j.at("f_x2").get<i64>();
        row.count_x1 = j.at("count_x1").get<i64>();
        row.count_x2 = j.at("count_x2").get<i64>();
        row.verdict = j.at("verdict").get<std::string>();
        if (j.contains("oracle_verdict"))
            row.oracle_verdict = j["oracle_verdict"].get<std::string>();
        if (j.contains("oracle_value"))
            row.oracle_value = j["oracle_value"].get<double>();
        return row;
    } catch (nlohmann::json::exception const & e) {
        throw DataError(std::string("bad scan row: ") + e.what());
    }
}

} // namespace lcrit
