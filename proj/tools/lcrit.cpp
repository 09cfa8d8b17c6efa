// lcrit: command-line front end for the quadratic-form vanishing criterion.
//
// Exit codes: 0 success, 1 internal error, 2 precondition violation,
// 3 disagreement with a shipped reference table.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcrit/criterion.hpp"
#include "lcrit/errors.hpp"
#include "lcrit/oracle.hpp"
#include "lcrit/quadforms.hpp"
#include "lcrit/registry.hpp"
#include "lcrit/scan.hpp"
#include "lcrit/tables.hpp"

using namespace lcrit;
using nlohmann::ordered_json;

namespace {

constexpr int exit_internal = 1;
constexpr int exit_precondition = 2;
constexpr int exit_mismatch = 3;

struct CommonFlags
{
    bool json = false;
    bool oracle = false;
    std::optional<i64> oracle_terms;
    std::string data_dir;
};

ordered_json forms_json(FormSet const & set)
{
    auto arr = ordered_json::array();
    for (auto const & f : set.forms)
        arr.push_back({f.a, f.b, f.c});
    return arr;
}

ordered_json estimate_json(LValueEstimate const & est)
{
    ordered_json j;
    j["value"] = est.value;
    j["terms_used"] = est.terms_used;
    j["tail_bound"] = est.tail_bound;
    j["verdict"] = std::string(to_string(est.verdict));
    j["caveats"] = est.caveats;
    return j;
}

LValueEstimate run_oracle(i64 level, i64 d, CommonFlags const & flags)
{
    auto const registry = CurveRegistry::load(resolve_data_dir(flags.data_dir));
    LValueConfig config;
    config.terms = flags.oracle_terms;
    i64 const terms = flags.oracle_terms.value_or(default_terms(level, d));
    if (terms > config.max_terms)
        return twisted_l_value(level, d, CoefficientSeries(level, {1}), config);
    auto const coeffs = coefficients_for(registry.at(level), terms);
    return twisted_l_value(level, d, coeffs, config);
}

void print_verdict_text(VanishingVerdict const & v)
{
    auto const & row = level_data(v.level);
    std::cout << "level " << v.level << ", D = " << v.d << ", D0 = " << row.d0 << "\n";
    std::cout << "F(" << row.x1.str() << ") = " << v.at_x1.value << "  (#S = " << v.at_x1.count << ")\n";
    std::cout << "F(" << row.x2.str() << ") = " << v.at_x2.value << "  (#S = " << v.at_x2.count << ")\n";
    std::cout << "verdict: " << to_string(v.outcome) << "\n";
    for (auto const & n : v.notes)
        std::cout << "note: " << n << "\n";
}

ordered_json verdict_json(VanishingVerdict const & v)
{
    auto const & row = level_data(v.level);
    ordered_json j;
    j["level"] = v.level;
    j["D"] = v.d;
    j["D0"] = row.d0;
    j["x1"] = row.x1.str();
    j["x2"] = row.x2.str();
    j["f_x1"] = v.at_x1.value;
    j["f_x2"] = v.at_x2.value;
    j["count_x1"] = v.at_x1.count;
    j["count_x2"] = v.at_x2.count;
    j["verdict"] = v.outcome == Vanishing::LVanishes ? "vanishes" : "nonzero";
    j["notes"] = v.notes;
    return j;
}

int cmd_check(i64 level, i64 d, bool dump_forms, CommonFlags const & flags)
{
    auto const v = vanishing_verdict(level, d);
    std::optional<LValueEstimate> est;
    if (flags.oracle)
        est = run_oracle(level, d, flags);
    std::optional<FormSet> forms1, forms2;
    if (dump_forms) {
        auto const & row = level_data(level);
        forms1 = enumerate_forms(level, checked_mul(d, row.d0), row.x1);
        forms2 = enumerate_forms(level, checked_mul(d, row.d0), row.x2);
    }

    if (flags.json) {
        auto j = verdict_json(v);
        if (est)
            j["oracle"] = estimate_json(*est);
        if (dump_forms) {
            j["forms_x1"] = forms_json(*forms1);
            j["forms_x2"] = forms_json(*forms2);
        }
        std::cout << j.dump() << "\n";
        return 0;
    }
    print_verdict_text(v);
    if (est) {
        std::cout << "oracle: L(E_D,1) ~ " << est->value << " (+- " << est->tail_bound << ", "
                  << est->terms_used << " terms) -> " << to_string(est->verdict) << "\n";
        for (auto const & c : est->caveats)
            std::cout << "oracle note: " << c << "\n";
    }
    if (dump_forms) {
        std::cout << "forms at x1: " << forms_json(*forms1).dump() << "\n";
        std::cout << "forms at x2: " << forms_json(*forms2).dump() << "\n";
    }
    return 0;
}

int cmd_scan(i64 level, i64 from, i64 to, bool good_only, unsigned workers, std::string const & out_path,
             CommonFlags const & flags)
{
    ScanOptions opts;
    opts.level = level;
    opts.from = from;
    opts.to = to;
    opts.good_only = good_only;
    opts.workers = workers;
    opts.oracle_config.terms = flags.oracle_terms;
    // Validate bounds before touching the data directory.
    auto const ds = scan_discriminants(level, from, to, good_only);
    if (flags.oracle && !ds.empty()) {
        auto const registry = CurveRegistry::load(resolve_data_dir(flags.data_dir));
        i64 const terms = flags.oracle_terms.value_or(default_terms(level, ds.back()));
        if (terms <= opts.oracle_config.max_terms)
            opts.oracle_coefficients =
                std::make_shared<CoefficientSeries const>(coefficients_for(registry.at(level), terms));
        else
            opts.oracle_coefficients = std::make_shared<CoefficientSeries const>(level, std::vector<i64>{1});
    }

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file)
            throw PreconditionError("cannot open output file " + out_path);
    }
    std::ostream & out = out_path.empty() ? std::cout : file;
    bool const with_oracle = flags.oracle;
    if (!flags.json)
        out << csv_header(with_oracle) << "\n";
    try {
        scan(opts, [&](ScanRow const & row) {
            out << (flags.json ? to_json_line(row) : to_csv(row, with_oracle)) << "\n";
        });
    } catch (...) {
        out.flush();
        throw;
    }
    out.flush();
    return 0;
}

int cmd_table(std::string const & name, std::optional<i64> max_abs_d, unsigned workers, CommonFlags const & flags)
{
    auto const report = reproduce_table(name, resolve_data_dir(flags.data_dir), max_abs_d, workers, std::cout);
    return report.mismatches ? exit_mismatch : 0;
}

int cmd_congruent(i64 n, CommonFlags const & flags)
{
    auto const v = congruent_verdict(n);
    if (flags.json) {
        auto j = verdict_json(v.basis);
        j["n"] = n;
        j["outcome"] = std::string(to_string(v.outcome));
        j["unconditional"] = v.outcome == Congruence::ProvenNonCongruent;
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "n = " << n << ": " << to_string(v.outcome) << "  (F(0) = " << v.basis.at_x1.value
              << ", F(1/3) = " << v.basis.at_x2.value << ")\n";
    return 0;
}

int cmd_cubes(i64 n, CommonFlags const & flags)
{
    auto const v = cubes_verdict(n);
    if (flags.json) {
        auto j = verdict_json(v.basis);
        j["n"] = n;
        j["outcome"] = std::string(to_string(v.outcome));
        j["unconditional"] = v.outcome == CubesOutcome::FiniteProven;
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "x^3 + " << n << " y^2 = 432: " << to_string(v.outcome) << "  (F(0) = "
              << v.basis.at_x1.value << ", F(1/2) = " << v.basis.at_x2.value << ")\n";
    return 0;
}

int cmd_parity(i64 p, CommonFlags const & flags)
{
    auto const r = parity_test(p);
    if (flags.json) {
        ordered_json j;
        j["p"] = r.p;
        j["count"] = r.count;
        j["odd"] = r.odd;
        j["proven_noncongruent"] = r.proven_noncongruent;
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "p = " << p << ": #S(1/3) = " << r.count << " (" << (r.odd ? "odd" : "even") << ")  -> "
              << (r.proven_noncongruent ? "NOT congruent (unconditional)" : "parity test inconclusive") << "\n";
    return 0;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Decide L(E_D,1) = 0 for quadratic twists at dimension one levels via exact sums over "
                 "binary quadratic forms"};
    app.require_subcommand(1);

    CommonFlags flags;
    app.add_option("--data-dir", flags.data_dir, "curve/eta registry and table fixtures (LCRIT_DATA_DIR overrides)");

    i64 level = 32;
    i64 disc = 0;
    bool dump_forms = false;
    auto * check = app.add_subcommand("check", "F(x1), F(x2) and the vanishing verdict for one D");
    check->add_option("--level", level, "dimension one level N")->required();
    check->add_option("--disc", disc, "negative fundamental discriminant D")->required();
    check->add_flag("--json", flags.json, "machine-readable output");
    check->add_flag("--oracle", flags.oracle, "append the truncated L-series estimate");
    check->add_option("--oracle-terms", flags.oracle_terms, "truncation length for the oracle");
    check->add_flag("--dump-forms", dump_forms, "list the forms in each sum");

    i64 from = -3;
    i64 to = -3;
    bool good_only = false;
    unsigned workers = 0;
    std::string out_path;
    auto * scan_cmd = app.add_subcommand("scan", "CSV/NDJSON over a descending range of D");
    scan_cmd->add_option("--level", level, "dimension one level N")->required();
    scan_cmd->add_option("--from", from, "first (largest) D, e.g. -3")->required();
    scan_cmd->add_option("--to", to, "last (smallest) D, e.g. -5000")->required();
    scan_cmd->add_flag("--good-only", good_only, "only D meeting the level's condition");
    scan_cmd->add_option("--parallel", workers, "worker threads (default: all cores)");
    scan_cmd->add_flag("--json", flags.json, "NDJSON instead of CSV");
    scan_cmd->add_flag("--oracle", flags.oracle, "add oracle_verdict and oracle_value columns");
    scan_cmd->add_option("--oracle-terms", flags.oracle_terms, "fixed truncation length for the oracle");
    scan_cmd->add_option("--out", out_path, "output file (default stdout)");

    std::string table_name;
    std::optional<i64> max_abs_d;
    auto * table = app.add_subcommand("table", "recompute a reference table and compare");
    table->add_option("name", table_name, "maincor, primes, cubes or discs")->required();
    table->add_option("--max-abs-d", max_abs_d, "skip rows with |D| (or p) above this bound");
    table->add_option("--parallel", workers, "worker threads (default: all cores)");

    i64 n = 0;
    auto * congruent = app.add_subcommand("congruent", "level 32 verdict on whether n is congruent");
    congruent->add_option("n", n, "n = 3 mod 8 with -n fundamental")->required();
    congruent->add_flag("--json", flags.json, "machine-readable output");

    auto * cubes = app.add_subcommand("cubes", "level 27 verdict on x^3 + n y^2 = 432");
    cubes->add_option("n", n, "n = 1 mod 3 with -n fundamental")->required();
    cubes->add_flag("--json", flags.json, "machine-readable output");

    auto * parity = app.add_subcommand("parity", "parity test for a prime p = 3 mod 8");
    parity->add_option("p", n, "prime p = 3 mod 8")->required();
    parity->add_flag("--json", flags.json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const & e) {
        return app.exit(e);
    } catch (CLI::ParseError const & e) {
        app.exit(e);
        return exit_precondition;
    }

    try {
        if (*check)
            return cmd_check(level, disc, dump_forms, flags);
        if (*scan_cmd)
            return cmd_scan(level, from, to, good_only, workers, out_path, flags);
        if (*table)
            return cmd_table(table_name, max_abs_d, workers, flags);
        if (*congruent)
            return cmd_congruent(n, flags);
        if (*cubes)
            return cmd_cubes(n, flags);
        if (*parity)
            return cmd_parity(n, flags);
    } catch (PreconditionError const & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_precondition;
    } catch (std::exception const & e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_internal;
}
