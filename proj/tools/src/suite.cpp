#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace ybv::cli {

namespace {

bool accepts(const CheckDef& def, const std::string& key)
{
    return std::find(def.keys.begin(), def.keys.end(), key) != def.keys.end();
}

std::vector<int> d_values(const json& v)
{
    std::vector<int> out;
    auto one = [&](const json& x) {
        if (!x.is_number_integer())
            throw ConfigError("d must be an integer or an array of integers");
        out.push_back(x.get<int>());
    };
    if (v.is_array()) {
        for (const auto& x : v)
            one(x);
        if (out.empty())
            throw ConfigError("d list is empty");
    } else {
        one(v);
    }
    return out;
}

std::string exact_text(const json& v, const std::string& key)
{
    if (v.is_number_integer())
        return std::to_string(v.get<long long>());
    if (v.is_string())
        return v.get<std::string>();
    throw ConfigError(key + " must be an integer or a \"p/q\" string");
}

const char* const kAllSigns[] = {"+++", "++-", "+-+", "+--", "-++", "-+-", "--+", "---"};

}  // namespace

std::vector<Job> expand(const std::string& check_id, const json& params, const Settings& settings)
{
    const CheckDef* def = find_check(check_id);
    if (!def)
        throw ConfigError("unknown check '" + check_id + "'");
    if (!params.is_object())
        throw ConfigError(check_id + ": params must be an object");
    for (const auto& [key, value] : params.items()) {
        (void)value;
        if (!accepts(*def, key))
            throw ConfigError(check_id + ": unknown parameter '" + key + "'");
    }

    json base = json::object();
    const json generic = {{"u", settings.u},         {"v", settings.v},           {"norm", settings.norm},
                          {"rep", settings.rep},     {"seed", settings.seed},     {"points", settings.points}};
    for (const auto& [key, value] : generic.items())
        if (accepts(*def, key))
            base[key] = value;
    const json own = def->defaults(settings);
    for (const auto& [key, value] : own.items())
        if (accepts(*def, key))
            base[key] = value;
    if (settings.tol && accepts(*def, "tol"))
        base["tol"] = *settings.tol;
    for (const auto& [key, value] : params.items())
        if (key != "d")
            base[key] = value;

    std::vector<json> variants;
    if (def->uses_d) {
        const std::vector<int> ds = params.contains("d") ? d_values(params.at("d")) : settings.d_list;
        for (int d : ds) {
            json p = base;
            p["d"] = d;
            variants.push_back(std::move(p));
        }
    } else {
        variants.push_back(base);
    }
    if (accepts(*def, "signs") && !params.contains("signs")) {
        std::vector<json> all;
        for (const auto& p : variants)
            for (const char* s : kAllSigns) {
                json q = p;
                q["signs"] = s;
                all.push_back(std::move(q));
            }
        variants = std::move(all);
    }

    std::vector<Job> jobs;
    for (auto& p : variants) {
        ParamReader reader(check_id, p);
        Runner run;
        try {
            run = def->prepare(reader, settings);
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            throw ConfigError(check_id + ": " + e.what());
        }
        jobs.push_back({def, std::move(p), std::move(run)});
    }
    return jobs;
}

void apply_defaults(const json& defaults, Settings& s)
{
    if (!defaults.is_object())
        throw ConfigError("suite defaults must be an object");
    for (const auto& [key, v] : defaults.items()) {
        if (key == "d") {
            s.d_list = d_values(v);
        } else if (key == "u") {
            s.u = exact_text(v, key);
        } else if (key == "v") {
            s.v = exact_text(v, key);
        } else if (key == "norm" || key == "rep") {
            if (!v.is_string())
                throw ConfigError(key + " must be a string");
            (key == "norm" ? s.norm : s.rep) = v.get<std::string>();
        } else if (key == "tol") {
            if (!v.is_number() || !(v.get<double>() > 0))
                throw ConfigError("tol must be a positive number");
            s.tol = v.get<double>();
        } else if (key == "seed") {
            if (!v.is_number_unsigned())
                throw ConfigError("seed must be a nonnegative integer");
            s.seed = v.get<std::uint64_t>();
        } else if (key == "points") {
            if (!v.is_number_integer() || v.get<int>() < 1)
                throw ConfigError("points must be a positive integer");
            s.points = v.get<int>();
        } else if (key == "budget_dim") {
            if (!v.is_number_unsigned())
                throw ConfigError("budget_dim must be a nonnegative integer");
            s.budget_dim = v.get<std::size_t>();
        } else if (key == "slow") {
            if (!v.is_boolean())
                throw ConfigError("slow must be a boolean");
            s.slow = v.get<bool>();
        } else {
            throw ConfigError("unknown suite default '" + key + "'");
        }
    }
}

std::vector<Job> load_suite(const json& suite, Settings& settings)
{
    if (!suite.is_object())
        throw ConfigError("suite must be a JSON object");
    for (const auto& [key, value] : suite.items()) {
        (void)value;
        if (key != "defaults" && key != "checks")
            throw ConfigError("unknown suite key '" + key + "'");
    }
    if (suite.contains("defaults"))
        apply_defaults(suite.at("defaults"), settings);
    if (!suite.contains("checks") || !suite.at("checks").is_array())
        throw ConfigError("suite needs a \"checks\" array");

    std::vector<Job> jobs;
    for (const auto& entry : suite.at("checks")) {
        std::string id;
        json params = json::object();
        if (entry.is_string()) {
            id = entry.get<std::string>();
        } else if (entry.is_object() && entry.contains("check") && entry.at("check").is_string()) {
            id = entry.at("check").get<std::string>();
            for (const auto& [key, value] : entry.items()) {
                (void)value;
                if (key != "check" && key != "params")
                    throw ConfigError(id + ": unknown entry key '" + key + "'");
            }
            if (entry.contains("params"))
                params = entry.at("params");
        } else {
            throw ConfigError("each suite entry needs a \"check\" string");
        }
        auto more = expand(id, params, settings);
        std::move(more.begin(), more.end(), std::back_inserter(jobs));
    }
    return jobs;
}

std::vector<Job> default_suite(const Settings& settings)
{
    std::vector<Job> jobs;
    for (const auto& def : registry()) {
        if (def.slow && !settings.slow)
            continue;
        auto more = expand(def.id, json::object(), settings);
        std::move(more.begin(), more.end(), std::back_inserter(jobs));
    }
    return jobs;
}

std::vector<CheckReport> run_jobs(std::vector<Job>& jobs, const RunOptions& opts)
{
    std::vector<CheckReport> out(jobs.size());
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::optional<std::string> config_error;

    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            Stopwatch sw;
            try {
                out[i] = jobs[i].run();
            } catch (const std::invalid_argument& e) {
                std::lock_guard<std::mutex> lock(mu);
                if (!config_error)
                    config_error = jobs[i].def->id + ": " + e.what();
            } catch (const std::domain_error& e) {
                std::lock_guard<std::mutex> lock(mu);
                if (!config_error)
                    config_error = jobs[i].def->id + ": " + e.what();
            } catch (const std::exception& e) {
                CheckReport r;
                r.check_id = jobs[i].def->id;
                for (const auto& [key, value] : jobs[i].params.items())
                    r.params[key] = value.is_string() ? value.get<std::string>() : value.dump();
                r.status = Status::Fail;
                r.detail = std::string("error: ") + e.what();
                r.elapsed_ms = sw.elapsed_ms();
                out[i] = std::move(r);
            }
        }
    };

    const int n = std::max(1, std::min<int>(opts.jobs, static_cast<int>(jobs.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (config_error)
        throw ConfigError(*config_error);

    std::stable_sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) {
        if (a.check_id != b.check_id)
            return a.check_id < b.check_id;
        return a.params < b.params;
    });
    if (!opts.timing)
        for (auto& r : out)
            r.elapsed_ms = 0;
    return out;
}

ordered_json to_json(const CheckReport& r, bool timing)
{
    ordered_json j;
    j["check"] = r.check_id;
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : r.params)
        params[key] = value;
    j["params"] = std::move(params);
    j["status"] = to_string(r.status);
    j["exact"] = r.exact;
    j["max_residual"] = r.max_residual ? ordered_json(*r.max_residual) : ordered_json(nullptr);
    j["elapsed_ms"] = timing ? r.elapsed_ms : 0;
    j["detail"] = r.detail ? ordered_json(*r.detail) : ordered_json(nullptr);
    j["schema_version"] = kSchemaVersion;
    return j;
}

void write_json_lines(std::ostream& out, const std::vector<CheckReport>& reports, bool timing)
{
    for (const auto& r : reports)
        out << to_json(r, timing).dump() << '\n';
}

void write_table(std::ostream& out, const std::vector<CheckReport>& reports, bool timing)
{
    std::size_t w_id = 5, w_params = 6;
    std::vector<std::string> param_text;
    for (const auto& r : reports) {
        std::string p;
        for (const auto& [key, value] : r.params)
            p += (p.empty() ? "" : " ") + key + "=" + value;
        w_id = std::max(w_id, r.check_id.size());
        w_params = std::max(w_params, p.size());
        param_text.push_back(std::move(p));
    }
    w_params = std::min<std::size_t>(w_params, 60);

    out << std::left << std::setw(static_cast<int>(w_id)) << "check" << "  " << std::setw(static_cast<int>(w_params))
        << "params" << "  " << std::setw(7) << "status" << "  " << std::setw(12) << "residual";
    if (timing)
        out << "  " << std::right << std::setw(8) << "ms" << std::left;
    out << '\n';

    std::size_t pass = 0, fail = 0, skip = 0;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        std::string res = "exact";
        if (r.max_residual) {
            std::ostringstream s;
            s << std::scientific << std::setprecision(2) << *r.max_residual;
            res = s.str();
        }
        out << std::setw(static_cast<int>(w_id)) << r.check_id << "  " << std::setw(static_cast<int>(w_params))
            << param_text[i] << "  " << std::setw(7) << to_string(r.status) << "  " << std::setw(12) << res;
        if (timing)
            out << "  " << std::right << std::setw(8) << r.elapsed_ms << std::left;
        out << '\n';
        if (r.status != Status::Pass && r.detail)
            out << "    " << *r.detail << '\n';
        (r.status == Status::Pass ? pass : r.status == Status::Fail ? fail : skip) += 1;
    }
    out << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
}

int exit_code(const std::vector<CheckReport>& reports)
{
    for (const auto& r : reports)
        if (r.status == Status::Fail)
            return 1;
    return 0;
}

}  // namespace ybv::cli
