#include "cli.hpp"

#include "ybv/localyb.hpp"
#include "ybv/quadrature.hpp"
#include "ybv/relations.hpp"

#include <algorithm>

namespace ybv::cli {

using kernel::Rational;
using rmatrix::Normalization;
using rmatrix::RepChoice;

ParamReader::ParamReader(std::string check_id, json params) : id_(std::move(check_id)), params_(std::move(params)) {}

bool ParamReader::has(const std::string& key) const { return params_.contains(key); }

void ParamReader::fail(const std::string& key, const std::string& why) const
{
    throw ConfigError(id_ + ": parameter '" + key + "' " + why);
}

const json& ParamReader::at(const std::string& key) const
{
    auto it = params_.find(key);
    if (it == params_.end())
        fail(key, "is required");
    return *it;
}

int ParamReader::get_int(const std::string& key) const
{
    const json& v = at(key);
    if (v.is_number_integer())
        return v.get<int>();
    if (v.is_string()) {
        try {
            std::size_t used = 0;
            const int n = std::stoi(v.get<std::string>(), &used);
            if (used == v.get<std::string>().size())
                return n;
        } catch (const std::exception&) {
        }
    }
    fail(key, "must be an integer");
}

double ParamReader::get_double(const std::string& key) const
{
    const json& v = at(key);
    if (v.is_number())
        return v.get<double>();
    if (v.is_string()) {
        try {
            std::size_t used = 0;
            const double x = std::stod(v.get<std::string>(), &used);
            if (used == v.get<std::string>().size())
                return x;
        } catch (const std::exception&) {
        }
    }
    fail(key, "must be a number");
}

std::string ParamReader::get_string(const std::string& key) const
{
    const json& v = at(key);
    if (!v.is_string())
        fail(key, "must be a string");
    return v.get<std::string>();
}

Rational ParamReader::get_rational(const std::string& key) const
{
    const json& v = at(key);
    if (v.is_number_integer())
        return Rational(v.get<long>());
    if (v.is_string()) {
        try {
            return kernel::parse_rational(v.get<std::string>());
        } catch (const std::exception& e) {
            fail(key, std::string("is not an exact fraction: ") + e.what());
        }
    }
    fail(key, "must be an integer or a \"p/q\" string");
}

double ParamReader::get_real(const std::string& key) const
{
    const json& v = at(key);
    if (v.is_string()) {
        try {
            return kernel::to_double(kernel::parse_rational(v.get<std::string>()));
        } catch (const std::exception&) {
        }
    }
    return get_double(key);
}

namespace {

Normalization norm_of(const ParamReader& p)
{
    try {
        return rmatrix::parse_normalization(p.get_string("norm"));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("norm: ") + e.what());
    }
}

RepChoice rep_of(const ParamReader& p)
{
    try {
        return rmatrix::parse_rep(p.get_string("rep"));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("rep: ") + e.what());
    }
}

int d_of(const ParamReader& p)
{
    const int d = p.get_int("d");
    if (d < 2 || d > clifford::kDefaultMaxDim || d % 2 != 0)
        throw ConfigError("d must be even with 2 <= d <= " + std::to_string(clifford::kDefaultMaxDim));
    return d;
}

CheckOptions options_of(const ParamReader& p, const Settings& s)
{
    CheckOptions o;
    o.budget_dim = p.has("budget_dim") ? static_cast<std::size_t>(p.get_int("budget_dim")) : s.budget_dim;
    if (p.has("perturb_k"))
        o.perturb_k = p.get_int("perturb_k");
    return o;
}

std::array<int, 3> signs_of(const ParamReader& p)
{
    const std::string s = p.get_string("signs");
    if (s.size() != 3 || s.find_first_not_of("+-") != std::string::npos)
        throw ConfigError("signs must be three characters from {+,-}, e.g. \"+-+\"");
    return {s[0] == '+' ? 1 : -1, s[1] == '+' ? 1 : -1, s[2] == '+' ? 1 : -1};
}

rmatrix::QuantumRep qrep_of(const ParamReader& p, int d)
{
    const std::string name = p.get_string("qrep");
    if (name == "defining")
        return rmatrix::so_defining_rep(d);
    if (name == "spinor")
        return rmatrix::so_spinor_rep(clifford::build_gamma(d));
    throw ConfigError("qrep must be defining or spinor");
}

localyb::SamplingConfig sampling_of(const ParamReader& p)
{
    localyb::SamplingConfig cfg;
    cfg.points_per_region = p.get_int("points");
    if (cfg.points_per_region < 1)
        throw ConfigError("points must be positive");
    const json& seed = p.raw().at("seed");
    if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0))
        throw ConfigError("seed must be a nonnegative integer");
    cfg.seed = seed.get<std::uint64_t>();
    return cfg;
}

double tol_of(const ParamReader& p)
{
    const double t = p.get_double("tol");
    if (!(t > 0))
        throw ConfigError("tol must be positive");
    return t;
}

json common(const Settings& s, double default_tol)
{
    return {{"u", s.u}, {"v", s.v}, {"norm", s.norm}, {"rep", s.rep}, {"seed", s.seed}, {"points", s.points},
            {"tol", s.tol.value_or(default_tol)}};
}

json none(const Settings&) { return json::object(); }

template <class... K>
std::vector<std::string> keys(K... k)
{
    return {k...};
}

std::vector<CheckDef> build_registry()
{
    std::vector<CheckDef> r;
    auto add = [&](CheckDef def) {
        if (!def.defaults)
            def.defaults = none;
        r.push_back(std::move(def));
    };

    add({"clifford", "anticommutators, chirality and pair reflection", keys("d"), true, false, nullptr,
         [](const ParamReader& p, const Settings&) -> Runner {
             const int d = d_of(p);
             return [=] { return relations::check_clifford(d); };
         }});
    add({"coefficients", "recurrence, closed form and reciprocity of R_k", keys("d", "u", "norm"), true, false, nullptr,
         [](const ParamReader& p, const Settings&) -> Runner {
             const int d = d_of(p);
             const Rational u = p.get_rational("u");
             const auto n = norm_of(p);
             return [=] { return relations::check_coefficients(d, u, n); };
         }});
    add({"ybe", "R12(u)R23(u+v)R12(v) = R23(v)R12(u+v)R23(u)",
         keys("d", "u", "v", "norm", "rep", "perturb_k", "budget_dim"), true, false, nullptr,
         [](const ParamReader& p, const Settings& s) -> Runner {
             const int d = d_of(p);
             const Rational u = p.get_rational("u"), v = p.get_rational("v");
             const auto n = norm_of(p);
             const auto rp = rep_of(p);
             const auto o = options_of(p, s);
             return [=] { return relations::check_ybe(d, u, v, n, rp, o); };
         }});
    add({"three_term", "even/odd three-term relations and zero products",
         keys("d", "u", "v", "signs", "norm", "rep", "perturb_k", "budget_dim"), true, false, nullptr,
         [](const ParamReader& p, const Settings& s) -> Runner {
             const int d = d_of(p);
             const Rational u = p.get_rational("u"), v = p.get_rational("v");
             const auto sg = signs_of(p);
             const auto n = norm_of(p);
             const auto rp = rep_of(p);
             const auto o = options_of(p, s);
             return [=] { return relations::check_three_term(d, u, v, sg, n, rp, o); };
         }});
    add({"rll_fundamental", "RLL with the fundamental L-operator", keys("d", "u", "v", "norm", "rep", "budget_dim"),
         true, false, nullptr, [](const ParamReader& p, const Settings& s) -> Runner {
             const int d = d_of(p);
             const Rational u = p.get_rational("u"), v = p.get_rational("v");
             const auto n = norm_of(p);
             const auto rp = rep_of(p);
             const auto o = options_of(p, s);
             return [=] { return relations::check_rll_fundamental(d, u, v, n, rp, o); };
         }});
    add({"rll_quantum", "RLL with an so(d) quantum space", keys("d", "u", "v", "qrep", "norm", "rep", "budget_dim"),
         true, false, [](const Settings&) { return json{{"qrep", "defining"}}; },
         [](const ParamReader& p, const Settings& s) -> Runner {
             const int d = d_of(p);
             const Rational u = p.get_rational("u"), v = p.get_rational("v");
             const auto q = qrep_of(p, d);
             const auto n = norm_of(p);
             const auto rp = rep_of(p);
             const auto o = options_of(p, s);
             return [=] { return relations::check_rll_quantum(d, u, v, q, n, rp, o); };
         }});
    add({"asym", "antisymmetrized anticommutators of the generators", keys("d", "qrep"), true, false,
         [](const Settings&) { return json{{"qrep", "defining"}}; },
         [](const ParamReader& p, const Settings&) -> Runner {
             const int d = d_of(p);
             const auto q = qrep_of(p, d);
             return [=] { return relations::check_asym(q); };
         }});
    add({"unitarity", "R(u)R(-u) on both parities, binomial vs product h", keys("d", "u", "norm", "rep"), true, false,
         nullptr, [](const ParamReader& p, const Settings&) -> Runner {
             const int d = d_of(p);
             const Rational u = p.get_rational("u");
             const auto n = norm_of(p);
             const auto rp = rep_of(p);
             return [=] { return relations::check_unitarity(d, u, n, rp); };
         }});
    add({"symmetries", "spin(d) and chirality invariance of R", keys("d", "u", "norm", "rep"), true, false, nullptr,
         [](const ParamReader& p, const Settings&) -> Runner {
             const int d = d_of(p);
             const Rational u = p.get_rational("u");
             const auto n = norm_of(p);
             const auto rp = rep_of(p);
             return [=] { return relations::check_symmetries(d, u, n, rp); };
         }});
    add({"d6_reduction", "Weyl blocks of the d=6 R-matrix", keys("u"), false, false, nullptr,
         [](const ParamReader& p, const Settings&) -> Runner {
             const Rational u = p.get_rational("u");
             return [=] { return relations::check_d6_reduction(u); };
         }});
    add({"exchange_identities", "intertwining, PP', PP and braid relations", keys("d"), true, false, nullptr,
         [](const ParamReader& p, const Settings&) -> Runner {
             const int d = d_of(p);
             return [=] { return relations::check_exchange_identities(d); };
         }});
    add({"unit_gen", "E(x)E(y) = (1-xy)^d E((x+y)/(1-xy))", keys("d", "x", "y"), true, false,
         [](const Settings&) { return json{{"x", "1/3"}, {"y", "2/7"}}; },
         [](const ParamReader& p, const Settings&) -> Runner {
             const int d = d_of(p);
             const Rational x = p.get_rational("x"), y = p.get_rational("y");
             if (x * y == 1)
                 throw ConfigError("unit_gen: xy = 1 is excluded");
             return [=] { return relations::check_unit_gen(d, x, y); };
         }});
    add({"fundamental_ybe", "Yang-Baxter for the vector R-matrix", keys("d", "u", "v"), true, false, nullptr,
         [](const ParamReader& p, const Settings&) -> Runner {
             const int d = d_of(p);
             const Rational u = p.get_rational("u"), v = p.get_rational("v");
             return [=] { return relations::check_fundamental_ybe(d, u, v); };
         }});
    add({"epsilon_projector_limit", "lim R+(u)/u at u=0", keys("d"), true, false, nullptr,
         [](const ParamReader& p, const Settings&) -> Runner {
             const int d = d_of(p);
             return [=] { return relations::check_epsilon_projector_limit(d); };
         }});
    add({"local_ybe", "local Yang-Baxter matrix relation over sampled regions", keys("d", "points", "seed", "tol"),
         true, false, [](const Settings& s) { return common(s, 1e-9); },
         [](const ParamReader& p, const Settings&) -> Runner {
             const int d = d_of(p);
             const auto cfg = sampling_of(p);
             const double tol = tol_of(p);
             return [=] { return localyb::check_local_ybe_suite(d, cfg, tol); };
         }});
    add({"local_ybe_point", "local Yang-Baxter matrix relation at one point", keys("d", "x", "y", "z", "tol"), true,
         false,
         [](const Settings& s) {
             json j = common(s, 1e-9);
             j.update(json{{"x", 3}, {"y", 1}, {"z", 2}});
             return j;
         },
         [](const ParamReader& p, const Settings&) -> Runner {
             const int d = d_of(p);
             const localyb::Triple t{p.get_real("x"), p.get_real("y"), p.get_real("z")};
             const double tol = tol_of(p);
             return [=] { return localyb::check_local_ybe(clifford::build_gamma(d), t, tol); };
         }});
    add({"local_geometry", "primed coordinates, invariants, round trip and Jacobian", keys("points", "seed", "tol"),
         false, false, [](const Settings& s) { return common(s, 1e-10); },
         [](const ParamReader& p, const Settings&) -> Runner {
             const auto cfg = sampling_of(p);
             const double tol = tol_of(p);
             return [=] { return localyb::check_local_geometry(cfg, tol); };
         }});
    add({"integrand_symmetry", "pointwise symmetry of the triple-integral integrand",
         keys("d", "u", "v", "A", "B", "C", "points", "seed", "tol"), true, false,
         [](const Settings& s) {
             json j = common(s, 1e-8);
             j.update(json{{"A", 1}, {"B", 2}, {"C", 3}});
             return j;
         },
         [](const ParamReader& p, const Settings&) -> Runner {
             localyb::IntegrandParams q;
             q.d = d_of(p);
             q.u = p.get_real("u");
             q.v = p.get_real("v");
             q.A = p.get_real("A");
             q.B = p.get_real("B");
             q.C = p.get_real("C");
             const auto cfg = localyb::integrand_sampling(sampling_of(p));
             const double tol = tol_of(p);
             return [=] { return localyb::check_integrand_symmetry(q, cfg, tol); };
         }});
    add({"beta_integral", "Beta integrals of the coefficient weights", keys("d", "u", "tol"), true, false,
         [](const Settings& s) { return common(s, 1e-8); },
         [](const ParamReader& p, const Settings&) -> Runner {
             const int d = d_of(p);
             const Rational u = p.get_rational("u");
             if (sgn(u) <= 0)
                 throw ConfigError("beta_integral: u must be positive");
             const double tol = tol_of(p);
             return [=] { return quadrature::check_beta_integrals(d, u, tol); };
         }});
    add({"rfun_integral", "R-function integral against its series", keys("d", "u", "y", "tol"), true, false,
         [](const Settings& s) {
             json j = common(s, 1e-7);
             j["y"] = "1/2";
             return j;
         },
         [](const ParamReader& p, const Settings&) -> Runner {
             const int d = d_of(p);
             const double u = p.get_real("u"), y = p.get_real("y");
             if (!(u > 0))
                 throw ConfigError("rfun_integral: u must be positive");
             const double tol = tol_of(p);
             return [=] { return quadrature::check_rfun(d, u, y, tol); };
         }});
    add({"unitarity_integral", "double integral behind unitarity", keys("d", "u", "tol"), true, false,
         [](const Settings& s) { return common(s, 1e-4); },
         [](const ParamReader& p, const Settings&) -> Runner {
             const int d = d_of(p);
             const double u = p.get_real("u");
             if (!(u > 0 && u < 1))
                 throw ConfigError("unitarity_integral: u must lie in (0, 1)");
             const double tol = tol_of(p);
             return [=] { return quadrature::check_unitarity_integral(d, u, tol, tol); };
         }});
    add({"triple_integral", "I(A,B,C) = I(C,B,A) by 3D quadrature",
         keys("d", "u", "v", "A", "B", "C", "octant", "tol"), true, true,
         [](const Settings& s) {
             json j = common(s, 1e-3);
             j.update(json{{"A", 0.3}, {"B", 0.1}, {"C", 0.7}, {"octant", "+++"}});
             return j;
         },
         [](const ParamReader& p, const Settings&) -> Runner {
             quadrature::TripleIntegralParams q;
             q.d = d_of(p);
             q.u = p.get_real("u");
             q.v = p.get_real("v");
             if (!(q.u > 0) || !(q.v > 0))
                 throw ConfigError("triple_integral: u and v must be positive");
             q.A = p.get_real("A");
             q.B = p.get_real("B");
             q.C = p.get_real("C");
             const std::string o = p.get_string("octant");
             if (o.size() != 3 || o.find_first_not_of("+-") != std::string::npos)
                 throw ConfigError("octant must be three characters from {+,-}");
             for (int i = 0; i < 3; ++i)
                 q.octant[static_cast<std::size_t>(i)] = o[static_cast<std::size_t>(i)] == '+' ? 1 : -1;
             const double tol = tol_of(p);
             return [=] { return quadrature::check_triple_symmetry(q, tol); };
         }});
    return r;
}

}  // namespace

const std::vector<CheckDef>& registry()
{
    static const std::vector<CheckDef> r = build_registry();
    return r;
}

const CheckDef* find_check(std::string_view id)
{
    for (const auto& def : registry())
        if (def.id == id)
            return &def;
    return nullptr;
}

}  // namespace ybv::cli
