#include <doctest.h>

#include "weddle/suite/suite.hpp"

using namespace weddle;
using namespace weddle::suite;

TEST_CASE("suite selector parsing") {
    CHECK(parse_suites("").empty());
    CHECK(parse_suites("all").size() == 6);
    CHECK(parse_suites("theta,curve") == std::set<std::string>{"theta", "curve"});
    CHECK(parse_suites("heis,,heis") == std::set<std::string>{"heis"});
    CHECK_THROWS_AS(parse_suites("theta,bogus"), ConfigError);
}

TEST_CASE("empty selector gives an empty report") {
    RunConfig cfg;
    const auto rep = run_suite(cfg);
    CHECK(rep.records.empty());
    CHECK_FALSE(rep.hard_failure());
    const auto j = rep.to_json();
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["records"].empty());
}

TEST_CASE("config errors") {
    RunConfig cfg;
    cfg.suites = {"curve"};
    cfg.p = 100;
    CHECK_THROWS_AS(run_suite(cfg), ConfigError);
    cfg.p = 101;
    cfg.roots = {0, 1, 2, 3, 4, 105};
    CHECK_THROWS_AS(run_suite(cfg), ConfigError);
    cfg.roots = {0, 1, 2, 3, 4, 5};
    cfg.tol = 0.0;
    CHECK_THROWS_AS(run_suite(cfg), ConfigError);

    RunConfig b;
    b.suites = {"burk"};
    b.p = 97;
    CHECK_THROWS_AS(run_suite(b), ConfigError);
    // A resource cap breach is a config error, not a failed check.
    b.p = 101;
    b.point_cap = 1000;
    CHECK_THROWS_AS(run_suite(b), ConfigError);
}

TEST_CASE("fixed seed gives a byte-identical report; seeds slice per record") {
    RunConfig cfg;
    cfg.suites = {"sympchar"};
    cfg.seed = 7;
    const auto a = run_suite(cfg), b = run_suite(cfg);
    CHECK(a.dump() == b.dump());
    REQUIRE(a.records.size() == 3);
    CHECK(a.records[0].id == "AC01");
    CHECK(a.records[2].id == "AC03");
    for (const auto& r : a.records) {
        CHECK(r.status == Status::Pass);
        CHECK_FALSE(r.runtime_ms.has_value());
    }
    CHECK(a.dump().find("runtime_ms") == std::string::npos);

    cfg.timings = true;
    for (const auto& r : run_suite(cfg).records) CHECK(r.runtime_ms.has_value());

    CHECK(seed_slice(1, "AC01") != seed_slice(1, "AC02"));
    CHECK(seed_slice(1, "AC01") != seed_slice(2, "AC01"));
    CHECK(seed_slice(5, "AC10") == seed_slice(5, "AC10"));
}

TEST_CASE("theta suite records under a custom period matrix") {
    RunConfig cfg;
    cfg.suites = {"theta"};
    cfg.omega = theta::PeriodMatrix({0.2, 1.1}, {-0.25, 0.15}, {-0.25, 0.15}, {0.1, 1.3});
    const auto rep = run_suite(cfg);
    REQUIRE(rep.records.size() == 3);
    for (const auto& r : rep.records) CHECK_MESSAGE(r.status == Status::Pass, r.id << " " << r.error);
}
