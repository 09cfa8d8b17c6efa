#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lcrit/errors.hpp"
#include "lcrit/oracle.hpp"

#ifndef LCRIT_SOURCE_DATA_DIR
#define LCRIT_SOURCE_DATA_DIR "data"
#endif

namespace lcrit {

namespace {

using nlohmann::json;

i64 as_int(json const & v, std::string const & what)
{
    if (!v.is_number_integer())
        throw DataError(what + " must be an integer");
    return v.get<i64>();
}

} // namespace

CurveData parse_curve_data(std::string_view json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (json::parse_error const & e) {
        throw DataError(std::string("curve data is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw DataError("curve data must be a JSON object");
    for (auto const & [key, value] : doc.items()) {
        if (key != "level" && key != "eta" && key != "weierstrass" && key != "source")
            throw DataError("unknown key '" + key + "' in curve data");
    }
    if (!doc.contains("level") || !doc.contains("eta") || !doc.contains("weierstrass"))
        throw DataError("curve data needs the keys level, eta and weierstrass");

    CurveData out;
    out.level = as_int(doc["level"], "level");
    if (out.level < 1)
        throw DataError("level must be positive");

    auto const & eta = doc["eta"];
    if (!eta.is_null()) {
        if (!eta.is_array() || eta.empty())
            throw DataError("eta must be null or a non-empty array of [d, exponent] pairs");
        EtaQuotient q;
        for (auto const & factor : eta) {
            if (!factor.is_array() || factor.size() != 2)
                throw DataError("eta factor must be a [d, exponent] pair");
            i64 const d = as_int(factor[0], "eta d");
            i64 const e = as_int(factor[1], "eta exponent");
            if (d < 1 || out.level % d != 0)
                throw DataError("eta d = " + std::to_string(d) + " must be a positive divisor of the level");
            if (e == 0 || std::abs(e) > 48)
                throw DataError("eta exponent out of range");
            q.factors.emplace_back(d, static_cast<int>(e));
        }
        out.eta = std::move(q);
    }

    auto const & w = doc["weierstrass"];
    if (!w.is_null()) {
        if (!w.is_array() || w.size() != 5)
            throw DataError("weierstrass must be null or [a1, a2, a3, a4, a6]");
        CurveModel model;
        for (std::size_t i = 0; i < 5; ++i)
            model.a[i] = as_int(w[i], "weierstrass coefficient");
        if (model.discriminant() == 0)
            throw DataError("weierstrass model is singular");
        out.weierstrass = model;
    }

    if (!out.eta && !out.weierstrass)
        throw DataError("curve data for level " + std::to_string(out.level)
                        + " has neither eta nor weierstrass");
    if (doc.contains("source")) {
        if (!doc["source"].is_string())
            throw DataError("source must be a string");
        out.source = doc["source"].get<std::string>();
    }
    return out;
}

CurveRegistry CurveRegistry::load(std::filesystem::path const & data_dir)
{
    auto const dir = data_dir / "curves";
    if (!std::filesystem::is_directory(dir))
        throw DataError("curve data directory not found: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (auto const & entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    CurveRegistry reg;
    for (auto const & path : files) {
        std::ifstream in(path);
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            reg.add(parse_curve_data(buf.str()));
        } catch (DataError const & e) {
            throw DataError(path.string() + ": " + e.what());
        }
    }
    return reg;
}

void CurveRegistry::add(CurveData data)
{
    i64 const level = data.level;
    if (!entries_.emplace(level, std::move(data)).second)
        throw DataError("duplicate curve data for level " + std::to_string(level));
}

bool CurveRegistry::contains(i64 level) const
{
    return entries_.count(level) != 0;
}

CurveData const & CurveRegistry::at(i64 level) const
{
    auto const it = entries_.find(level);
    if (it == entries_.end())
        throw PreconditionError("no curve data for level " + std::to_string(level));
    return it->second;
}

std::vector<i64> CurveRegistry::levels() const
{
    std::vector<i64> out;
    for (auto const & [level, data] : entries_)
        out.push_back(level);
    return out;
}

std::filesystem::path resolve_data_dir(std::filesystem::path const & explicit_dir)
{
    if (char const * env = std::getenv("LCRIT_DATA_DIR"); env && *env)
        return env;
    if (!explicit_dir.empty())
        return explicit_dir;
    return LCRIT_SOURCE_DATA_DIR;
}

} // namespace lcrit
