#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "lcrit/criterion.hpp"
#include "lcrit/errors.hpp"
#include "lcrit/genus.hpp"
#include "lcrit/oracle.hpp"
#include "lcrit/quadforms.hpp"
#include "lcrit/registry.hpp"
#include "lcrit/scan.hpp"
#include "lcrit/tables.hpp"

namespace py = pybind11;
using namespace lcrit;

namespace {

using Form = std::tuple<i64, i64, i64>;

RationalPoint point(std::string const & x)
{
    return RationalPoint::parse(x);
}

BinaryQuadraticForm form(Form const & f)
{
    return {std::get<0>(f), std::get<1>(f), std::get<2>(f)};
}

py::dict evaluation(FEvaluation const & f)
{
    py::dict d;
    d["D"] = f.d;
    d["x"] = f.x.str();
    d["value"] = f.value;
    d["count"] = f.count;
    return d;
}

py::dict verdict(VanishingVerdict const & v)
{
    py::dict d;
    d["level"] = v.level;
    d["D"] = v.d;
    d["vanishes"] = v.outcome == Vanishing::LVanishes;
    d["outcome"] = std::string(to_string(v.outcome));
    d["f_x1"] = v.at_x1.value;
    d["f_x2"] = v.at_x2.value;
    d["count_x1"] = v.at_x1.count;
    d["count_x2"] = v.at_x2.count;
    d["notes"] = v.notes;
    return d;
}

py::dict scan_row(ScanRow const & r)
{
    py::dict d;
    d["D"] = r.d;
    d["f_x1"] = r.f_x1;
    d["f_x2"] = r.f_x2;
    d["count_x1"] = r.count_x1;
    d["count_x2"] = r.count_x2;
    d["verdict"] = r.verdict;
    if (r.oracle_verdict)
        d["oracle_verdict"] = *r.oracle_verdict;
    if (r.oracle_value)
        d["oracle_value"] = *r.oracle_value;
    return d;
}

CoefficientSeries series_for(i64 level, i64 max_n, std::filesystem::path const & data_dir)
{
    auto const registry = CurveRegistry::load(resolve_data_dir(data_dir));
    return coefficients_for(registry.at(level), max_n);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact evaluation of the twisted-sum vanishing criterion";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<OverflowError>(m, "OverflowError", error.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
    py::register_exception<DataError>(m, "DataError", error.ptr());

    m.def("kronecker", &kronecker, py::arg("a"), py::arg("n"));
    m.def("is_fundamental_discriminant", &is_fundamental_discriminant, py::arg("d"));
    m.def("is_prime", [](u64 n) { return is_prime(n); }, py::arg("n"));
    m.def("isqrt", &isqrt, py::arg("n"));

    m.def(
        "enumerate_forms",
        [](i64 level, i64 delta, std::string const & x) {
            std::vector<Form> out;
            for (auto const & f : enumerate_forms(level, delta, point(x)).forms)
                out.emplace_back(f.a, f.b, f.c);
            return out;
        },
        py::arg("level"), py::arg("delta"), py::arg("x"), "Forms [a,b,c] of discriminant delta with a<0, level|a, Q(x)>0.");
    m.def(
        "genus_character", [](i64 d0, Form const & q) { return genus_character(d0, form(q)); }, py::arg("d0"),
        py::arg("form"));

    m.def("levels", [] {
        std::vector<i64> out;
        for (auto const & row : all_levels())
            out.push_back(row.level);
        return out;
    });
    m.def(
        "level_data",
        [](i64 level) {
            auto const & row = level_data(level);
            py::dict d;
            d["level"] = row.level;
            d["d0"] = row.d0;
            d["x1"] = row.x1.str();
            d["x2"] = row.x2.str();
            d["condition"] = row.condition_text();
            d["coefficient_source"] = std::string(to_string(row.coefficient_source));
            return d;
        },
        py::arg("level"));
    m.def("table_condition", &table_condition, py::arg("level"), py::arg("d"));

    m.def(
        "f_sum",
        [](i64 level, i64 d0, i64 d, std::string const & x) { return evaluation(f_sum(level, d0, d, point(x))); },
        py::arg("level"), py::arg("d0"), py::arg("d"), py::arg("x"));
    m.def(
        "vanishing_verdict", [](i64 level, i64 d) { return verdict(vanishing_verdict(level, d)); }, py::arg("level"),
        py::arg("d"));
    m.def(
        "congruent_verdict",
        [](i64 n) {
            auto const v = congruent_verdict(n);
            auto d = verdict(v.basis);
            d["n"] = n;
            d["verdict"] = std::string(to_string(v.outcome));
            d["unconditional"] = v.outcome == Congruence::ProvenNonCongruent;
            return d;
        },
        py::arg("n"));
    m.def(
        "parity_test",
        [](i64 p) {
            auto const r = parity_test(p);
            py::dict d;
            d["p"] = r.p;
            d["count"] = r.count;
            d["odd"] = r.odd;
            d["proven_noncongruent"] = r.proven_noncongruent;
            return d;
        },
        py::arg("p"));
    m.def(
        "cubes_verdict",
        [](i64 n) {
            auto const v = cubes_verdict(n);
            auto d = verdict(v.basis);
            d["n"] = n;
            d["verdict"] = std::string(to_string(v.outcome));
            d["unconditional"] = v.outcome == CubesOutcome::FiniteProven;
            return d;
        },
        py::arg("n"));

    m.def(
        "scan",
        [](i64 level, i64 from, i64 to, bool good_only, unsigned workers) {
            ScanOptions opt;
            opt.level = level;
            opt.from = from;
            opt.to = to;
            opt.good_only = good_only;
            opt.workers = workers;
            std::vector<ScanRow> rows;
            {
                py::gil_scoped_release release;
                rows = scan_collect(opt);
            }
            py::list out;
            for (auto const & r : rows)
                out.append(scan_row(r));
            return out;
        },
        py::arg("level"), py::arg("from_d"), py::arg("to_d"), py::arg("good_only") = false, py::arg("workers") = 0,
        "Rows for fundamental D descending from from_d to to_d.");

    m.def(
        "coefficients",
        [](i64 level, i64 max_n, std::filesystem::path const & data_dir) {
            return series_for(level, max_n, data_dir).terms();
        },
        py::arg("level"), py::arg("max_n"), py::arg("data_dir") = std::filesystem::path{}, "a_1 .. a_max_n.");
    m.def(
        "twisted_l_value",
        [](i64 level, i64 d, std::optional<i64> terms, std::filesystem::path const & data_dir) {
            LValueConfig config;
            config.terms = terms;
            auto const series = series_for(level, terms.value_or(default_terms(level, d)), data_dir);
            auto const est = twisted_l_value(level, d, series, config);
            py::dict out;
            out["D"] = est.d;
            out["value"] = est.value;
            out["terms_used"] = est.terms_used;
            out["tail_bound"] = est.tail_bound;
            out["verdict"] = std::string(to_string(est.verdict));
            out["caveats"] = est.caveats;
            return out;
        },
        py::arg("level"), py::arg("d"), py::arg("terms") = std::nullopt,
        py::arg("data_dir") = std::filesystem::path{});

    m.def(
        "reproduce_table",
        [](std::string const & name, std::optional<i64> max_abs_d, unsigned workers,
           std::filesystem::path const & data_dir) {
            std::ostringstream text;
            TableReport report;
            {
                py::gil_scoped_release release;
                report = reproduce_table(name, resolve_data_dir(data_dir), max_abs_d, workers, text);
            }
            py::dict out;
            out["name"] = report.name;
            out["checked"] = report.checked;
            out["skipped"] = report.skipped;
            out["mismatches"] = report.mismatches;
            out["notes"] = report.warnings;
            out["text"] = text.str();
            return out;
        },
        py::arg("name"), py::arg("max_abs_d") = std::nullopt, py::arg("workers") = 0,
        py::arg("data_dir") = std::filesystem::path{});
}
