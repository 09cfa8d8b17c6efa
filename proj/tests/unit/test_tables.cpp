#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lcrit/errors.hpp"
#include "lcrit/oracle.hpp"
#include "lcrit/registry.hpp"
#include "lcrit/tables.hpp"

using namespace lcrit;

TEST_CASE("tables reproduce at small |D|")
{
    auto const dir = resolve_data_dir();
    for (auto const & [name, bound] : std::vector<std::pair<std::string, i64>>{
             {"maincor", 5000}, {"primes", 6000}, {"cubes", 3200}}) {
        std::ostringstream out;
        auto const report = reproduce_table(name, dir, bound, 2, out);
        CHECK_MESSAGE(report.mismatches == 0, out.str());
        CHECK(report.checked >= 6);
        CHECK(out.str().find("MISMATCH") == std::string::npos);
    }
}

TEST_CASE("discs table agrees with the registry")
{
    std::ostringstream out;
    auto const report = reproduce_table("discs", resolve_data_dir(), std::nullopt, 4, out);
    CHECK_MESSAGE(report.mismatches == 0, out.str());
    CHECK(report.checked == 12);
}

TEST_CASE("discs fixture mirrors the registry rows")
{
    std::ifstream in(resolve_data_dir() / "tables" / "discs.json");
    auto const doc = nlohmann::json::parse(in);
    std::size_t i = 0;
    for (auto const & l : doc.at("levels")) {
        auto const & row = all_levels()[i++];
        CHECK(l.at("level").get<i64>() == row.level);
        CHECK(l.at("condition").get<std::string>() == row.condition_text());
        REQUIRE(l.at("noninvariant").size() == row.noninvariant_examples.size());
        for (std::size_t k = 0; k < row.noninvariant_examples.size(); ++k) {
            CHECK(l.at("noninvariant")[k].at("m").get<i64>() == row.noninvariant_examples[k].m);
            CHECK(l.at("noninvariant")[k].at("underlined").get<bool>() == row.noninvariant_examples[k].underlined);
        }
    }
}

TEST_CASE("a corrupted fixture is reported as a mismatch")
{
    auto const tmp = std::filesystem::temp_directory_path() / "lcrit_table_test";
    std::filesystem::create_directories(tmp / "tables");
    std::ifstream in(resolve_data_dir() / "tables" / "maincor.json");
    auto doc = nlohmann::json::parse(in);
    doc["rows"][0]["f_x2"] = 7;
    std::ofstream(tmp / "tables" / "maincor.json") << doc.dump();
    std::ostringstream out;
    auto const report = reproduce_table("maincor", tmp, 5000, 1, out);
    CHECK(report.mismatches == 1);
    CHECK(out.str().find("MISMATCH(values)") != std::string::npos);
    std::filesystem::remove_all(tmp);
}

TEST_CASE("table errors")
{
    std::ostringstream out;
    CHECK_THROWS_AS(reproduce_table("nope", resolve_data_dir(), std::nullopt, 1, out), PreconditionError);
    CHECK_THROWS_AS(reproduce_table("maincor", "/nonexistent", std::nullopt, 1, out), DataError);
}
