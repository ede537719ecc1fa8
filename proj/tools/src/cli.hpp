#pragma once

#include "ybv/kernel.hpp"
#include "ybv/report.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ybv::cli {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Values that apply to every check unless a check's params override them.
struct Settings {
    std::vector<int> d_list{2, 4};
    std::string u = "1/2";
    std::string v = "1/3";
    std::string norm = "product";
    std::string rep = "primed";
    std::optional<double> tol;
    std::uint64_t seed = 20240601;
    int points = 100;
    std::size_t budget_dim = default_budget_dim();
    bool slow = false;
};

// Typed access to one check's params; every key must be consumed or declared.
class ParamReader {
public:
    ParamReader(std::string check_id, json params);

    bool has(const std::string& key) const;
    int get_int(const std::string& key) const;
    double get_double(const std::string& key) const;
    std::string get_string(const std::string& key) const;
    // "p/q" strings or integers; decimals are rejected to keep exactness.
    kernel::Rational get_rational(const std::string& key) const;
    // JSON number or a "p/q" string.
    double get_real(const std::string& key) const;

    const json& raw() const { return params_; }

private:
    const json& at(const std::string& key) const;
    [[noreturn]] void fail(const std::string& key, const std::string& why) const;

    std::string id_;
    json params_;
};

using Runner = std::function<CheckReport()>;

struct CheckDef {
    std::string id;
    std::string summary;
    std::vector<std::string> keys;      // accepted params
    bool uses_d = true;                  // expanded over the d list when d is absent
    bool slow = false;                   // only with --slow
    std::function<json(const Settings&)> defaults;  // d-independent defaults
    std::function<Runner(const ParamReader&, const Settings&)> prepare;
};

const std::vector<CheckDef>& registry();
const CheckDef* find_check(std::string_view id);

struct Job {
    const CheckDef* def = nullptr;
    json params;
    Runner run;
};

// One entry of a suite: {"check": id, "params": {...}}.
std::vector<Job> expand(const std::string& check_id, const json& params, const Settings& settings);
// Parses {"defaults": {...}, "checks": [...]}; defaults update settings.
std::vector<Job> load_suite(const json& suite, Settings& settings);
std::vector<Job> default_suite(const Settings& settings);
// Reads a settings object (the "defaults" of a suite file) into settings.
void apply_defaults(const json& defaults, Settings& settings);

struct RunOptions {
    int jobs = 1;
    bool timing = true;
};

// Results sorted by check id, then params. Config errors raised by a check propagate as ConfigError.
std::vector<CheckReport> run_jobs(std::vector<Job>& jobs, const RunOptions& opts);

ordered_json to_json(const CheckReport& r, bool timing = true);
void write_json_lines(std::ostream& out, const std::vector<CheckReport>& reports, bool timing = true);
void write_table(std::ostream& out, const std::vector<CheckReport>& reports, bool timing = true);
// 0 when nothing failed, 1 otherwise.
int exit_code(const std::vector<CheckReport>& reports);

// dump gamma | coeffs | rmatrix | report-schema
ordered_json dump_object(const std::string& object, const json& params, const Settings& settings);

ordered_json report_schema();

}  // namespace ybv::cli
