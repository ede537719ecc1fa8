#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace ybv::cli;

struct Flags {
    std::vector<int> d;
    std::string u, v, norm, rep, format = "json";
    std::optional<double> tol;
    std::optional<std::uint64_t> seed;
    std::optional<int> points;
    std::optional<std::size_t> budget_dim;
    int jobs = 1;
    bool slow = false;
    bool no_timing = false;
    std::vector<std::string> params;
};

void add_common(CLI::App* cmd, Flags& f, bool with_run_flags)
{
    cmd->add_option("--d", f.d, "even dimensions (repeat or comma-separate)")->delimiter(',');
    cmd->add_option("--u", f.u, "spectral parameter u as p/q");
    cmd->add_option("--v", f.v, "spectral parameter v as p/q");
    cmd->add_option("--norm", f.norm, "coefficient normalization")
        ->check(CLI::IsMember({"unit", "product", "beta", "d6paper"}));
    cmd->add_option("--rep", f.rep, "odd-part representation")->check(CLI::IsMember({"naive", "primed", "doubleprimed"}));
    if (!with_run_flags)
        return;
    cmd->add_option("--tol", f.tol, "tolerance for floating-point checks")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", f.seed, "sampling seed");
    cmd->add_option("--points", f.points, "sample points per region")->check(CLI::PositiveNumber);
    cmd->add_option("--budget-dim", f.budget_dim, "dimension cap for triple-product checks (overrides YBV_BUDGET_DIM)");
    cmd->add_option("--jobs", f.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--format", f.format, "report format")->check(CLI::IsMember({"json", "table"}));
    cmd->add_flag("--slow", f.slow, "include the 3D quadrature check");
    cmd->add_flag("--no-timing", f.no_timing, "report elapsed_ms as 0");
}

void apply(const Flags& f, Settings& s)
{
    if (!f.d.empty())
        s.d_list = f.d;
    if (!f.u.empty())
        s.u = f.u;
    if (!f.v.empty())
        s.v = f.v;
    if (!f.norm.empty())
        s.norm = f.norm;
    if (!f.rep.empty())
        s.rep = f.rep;
    if (f.tol)
        s.tol = f.tol;
    if (f.seed)
        s.seed = *f.seed;
    if (f.points)
        s.points = *f.points;
    if (f.budget_dim)
        s.budget_dim = *f.budget_dim;
    if (f.slow)
        s.slow = true;
}

json parse_params(const std::vector<std::string>& items)
{
    json out = json::object();
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ConfigError("--param expects key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq), text = item.substr(eq + 1);
        json value = json::parse(text, nullptr, false);
        out[key] = value.is_discarded() ? json(text) : value;
    }
    return out;
}

json read_suite(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open suite file '" + path + "'");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded())
        throw ConfigError("suite file '" + path + "' is not valid JSON");
    return j;
}

int report(std::vector<Job>& jobs, const Flags& f)
{
    const RunOptions opts{f.jobs, !f.no_timing};
    const auto reports = run_jobs(jobs, opts);
    if (f.format == "table") {
        write_table(std::cout, reports, opts.timing);
    } else {
        write_json_lines(std::cout, reports, opts.timing);
        write_table(std::cerr, reports, opts.timing);
    }
    std::cout.flush();
    return exit_code(reports);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of the spinorial so(d) R-matrix and its identities", "ybv"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "ybv 0.1.0");

    Flags run_flags, check_flags, dump_flags;
    std::string suite_path, check_id, dump_what;
    bool all = false;

    auto* run = app.add_subcommand("run", "run a suite file or the default suite");
    add_common(run, run_flags, true);
    run->add_option("suite", suite_path, "suite JSON file");
    run->add_flag("--all", all, "run the default suite");

    auto* check = app.add_subcommand("check", "run one check");
    add_common(check, check_flags, true);
    check->add_option("id", check_id, "check id")->required();
    check->add_option("--param", check_flags.params, "check parameter key=value (repeatable)");

    auto* dump = app.add_subcommand("dump", "print a constructed object as JSON");
    add_common(dump, dump_flags, false);
    dump->add_option("object", dump_what, "gamma | coeffs | rmatrix | report-schema")->required();

    app.add_subcommand("list", "list registered checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Settings settings;
        if (*run) {
            if (all == !suite_path.empty())
                throw ConfigError("run needs exactly one of a suite file or --all");
            std::vector<Job> jobs;
            if (all) {
                apply(run_flags, settings);
                jobs = default_suite(settings);
            } else {
                const json suite = read_suite(suite_path);
                if (suite.is_object() && suite.contains("defaults"))
                    apply_defaults(suite.at("defaults"), settings);
                apply(run_flags, settings);
                json rest = suite;
                if (rest.is_object())
                    rest.erase("defaults");
                jobs = load_suite(rest, settings);
            }
            return report(jobs, run_flags);
        }
        if (*check) {
            apply(check_flags, settings);
            auto jobs = expand(check_id, parse_params(check_flags.params), settings);
            return report(jobs, check_flags);
        }
        if (*dump) {
            apply(dump_flags, settings);
            std::cout << dump_object(dump_what, json::object(), settings).dump() << '\n';
            return 0;
        }
        for (const auto& def : registry()) {
            std::cout << def.id << (def.slow ? " (slow)" : "") << "\n    " << def.summary << "\n    params:";
            for (const auto& k : def.keys)
                std::cout << ' ' << k;
            std::cout << '\n';
        }
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "ybv: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "ybv: " << e.what() << '\n';
        return 2;
    }
}
