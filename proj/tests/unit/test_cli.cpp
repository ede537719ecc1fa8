#include "cli.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace ybv;
using namespace ybv::cli;

TEST_CASE("registry ids are unique and resolvable")
{
    std::set<std::string> ids;
    for (const auto& def : registry()) {
        CHECK(ids.insert(def.id).second);
        CHECK(find_check(def.id) == &def);
    }
    CHECK(find_check("nope") == nullptr);
    CHECK(ids.count("ybe") == 1);
    CHECK(ids.count("triple_integral") == 1);
}

TEST_CASE("expansion over d and signs")
{
    Settings s;
    CHECK(expand("ybe", json::object(), s).size() == 2);
    CHECK(expand("ybe", json{{"d", {2, 4, 6}}}, s).size() == 3);
    CHECK(expand("three_term", json{{"d", 4}}, s).size() == 8);
    CHECK(expand("three_term", json{{"d", 4}, {"signs", "+-+"}}, s).size() == 1);
    CHECK(expand("d6_reduction", json::object(), s).size() == 1);
    const auto jobs = expand("unit_gen", json{{"d", 2}}, s);
    REQUIRE(jobs.size() == 1);
    CHECK(jobs[0].params.at("x") == "1/3");
    CHECK_FALSE(jobs[0].params.contains("u"));
}

TEST_CASE("config errors")
{
    Settings s;
    CHECK_THROWS_AS(expand("nope", json::object(), s), ConfigError);
    CHECK_THROWS_AS(expand("ybe", json{{"w", 1}}, s), ConfigError);
    CHECK_THROWS_AS(expand("ybe", json{{"d", 3}}, s), ConfigError);
    CHECK_THROWS_AS(expand("ybe", json{{"u", 0.5}}, s), ConfigError);
    CHECK_THROWS_AS(expand("ybe", json{{"u", "1/0"}}, s), ConfigError);
    CHECK_THROWS_AS(expand("ybe", json{{"norm", "gamma"}}, s), ConfigError);
    CHECK_THROWS_AS(expand("three_term", json{{"signs", "+*+"}}, s), ConfigError);
    CHECK_THROWS_AS(expand("local_ybe", json{{"points", 0}}, s), ConfigError);
    CHECK_THROWS_AS(load_suite(json{{"checks", {"ybe"}}, {"extra", 1}}, s), ConfigError);
    CHECK_THROWS_AS(load_suite(json{{"defaults", {{"colour", 1}}}, {"checks", json::array()}}, s), ConfigError);
}

TEST_CASE("pole met during a run is a config error")
{
    Settings s;
    auto jobs = expand("coefficients", json{{"d", 4}, {"u", -2}, {"norm", "unit"}}, s);
    CHECK_THROWS_AS(run_jobs(jobs, {}), ConfigError);
}

TEST_CASE("suite defaults feed every check")
{
    Settings s;
    const json suite = {{"defaults", {{"d", {2}}, {"u", "2"}, {"v", "-1/5"}}},
                        {"checks", json::array({"ybe", json{{"check", "clifford"}, {"params", {{"d", 4}}}}})}};
    auto jobs = load_suite(suite, s);
    REQUIRE(jobs.size() == 2);
    CHECK(jobs[0].params.at("u") == "2");
    CHECK(jobs[1].params.at("d") == 4);
    const auto reports = run_jobs(jobs, {2, false});
    CHECK(exit_code(reports) == 0);
    CHECK(reports[0].check_id == "clifford");
    CHECK(reports[1].check_id == "ybe");
}

TEST_CASE("json line layout")
{
    CheckReport r;
    r.check_id = "x";
    r.params = {{"d", "2"}};
    r.status = Status::Skipped;
    r.exact = false;
    r.max_residual = 0.5;
    r.elapsed_ms = 17;
    const auto line = to_json(r, true).dump();
    CHECK(line ==
          R"({"check":"x","params":{"d":"2"},"status":"SKIPPED","exact":false,"max_residual":0.5,"elapsed_ms":17,"detail":null,"schema_version":1})");
    CHECK(to_json(r, false).at("elapsed_ms") == 0);
    CHECK(exit_code({r}) == 0);
    r.status = Status::Fail;
    CHECK(exit_code({r}) == 1);
    std::ostringstream table;
    write_table(table, {r}, false);
    CHECK(table.str().find("0 passed, 1 failed, 0 skipped") != std::string::npos);
}

TEST_CASE("dumps")
{
    Settings s;
    CHECK(dump_object("coeffs", json{{"d", 6}, {"norm", "d6paper"}, {"u", "1"}}, s).dump() ==
          R"(["5/8","0","-1/8","0","1/8","0","-5/8"])");
    CHECK(dump_object("coeffs", json{{"d", 4}, {"norm", "unit"}, {"u", "1"}}, s).dump() == R"(["1","1","-1/3","-1","1"])");
    const auto g = dump_object("gamma", json{{"d", 2}}, s);
    CHECK(g.at("gammas").size() == 2);
    CHECK(g.at("gammas")[0].dump() == R"([["0","1"],["1","0"]])");
    CHECK(g.at("gamma5").dump() == R"([["1","0"],["0","-1"]])");
    const auto r = dump_object("rmatrix", json{{"d", 2}, {"u", "1/2"}, {"norm", "product"}, {"rep", "naive"}}, s);
    CHECK(r.at("dim") == 4);
    CHECK(r.at("nnz") == r.at("entries").size());
    CHECK(dump_object("report-schema", json::object(), s).at("properties").size() == 8);
    CHECK_THROWS_AS(dump_object("weights", json::object(), s), ConfigError);
}
