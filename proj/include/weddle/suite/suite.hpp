#pragma once

// Seeded check suites over all modules and their JSON report.
// One record per acceptance criterion AC01..AC13; suites:
//   sympchar AC01-03, heis AC04, burk AC05-08, theta AC09-10 and AC13,
//   curve AC11, cross AC12 (computes its own surfaces).

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "weddle/burkhardt/burkhardt.hpp"
#include "weddle/errors.hpp"
#include "weddle/theta/theta.hpp"

namespace weddle::suite {

using Json = nlohmann::ordered_json;

// Invalid field spec, unknown suite, resource-cap breach.
class ConfigError : public Error {
public:
    using Error::Error;
};

constexpr int kSchemaVersion = 1;

enum class Status { Pass, Fail, Soft };
std::string to_string(Status s);

struct Record {
    std::string id;      // "AC01".."AC13"
    std::string anchor;  // what the check establishes
    std::string suite;
    Status status = Status::Fail;
    bool soft_consistent = false;  // soft records: evidence agrees with the target
    Json measured = Json::object();
    Json tolerances = Json::object();
    std::optional<double> runtime_ms;
    std::string error;  // exception text when a check threw
};

struct RunConfig {
    std::set<std::string> suites;
    std::uint64_t seed = 1;
    std::int64_t p = 101;  // exact curve side and the F_p interpolation
    double tol = 1e-6;     // numeric theta-side criteria
    std::optional<theta::PeriodMatrix> omega;
    std::vector<long long> roots{0, 1, 2, 3, 4, 5};
    std::uint64_t point_cap = burkhardt::kDefaultPointCap;
    bool timings = false;
};

const std::vector<std::string>& suite_names();

// Comma-separated; "all" selects every suite, "" selects none.
std::set<std::string> parse_suites(const std::string& text);

// Throws ConfigError when the field spec or tolerance cannot be used by the selected suites.
void validate(const RunConfig& cfg);

struct Report {
    RunConfig config;
    std::vector<Record> records;  // sorted by id

    bool hard_failure() const;
    Json to_json() const;
    // Floats rounded to 6 significant digits; byte-identical for a fixed seed.
    std::string dump() const;
};

// Suites run concurrently, one task each; ResourceError becomes ConfigError.
Report run_suite(const RunConfig& cfg);

// Independent per-record seed: splitmix64 of the master seed and the id.
std::uint64_t seed_slice(std::uint64_t seed, const std::string& id);

}  // namespace weddle::suite
