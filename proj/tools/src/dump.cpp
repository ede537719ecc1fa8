#include "cli.hpp"

#include "ybv/clifford.hpp"
#include "ybv/rmatrix.hpp"

namespace ybv::cli {

namespace {

ordered_json matrix_rows(const kernel::SparseOperator& m)
{
    ordered_json rows = ordered_json::array();
    for (const auto& row : m.to_dense()) {
        ordered_json r = ordered_json::array();
        for (const auto& x : row)
            r.push_back(kernel::to_string(x));
        rows.push_back(std::move(r));
    }
    return rows;
}

int dump_d(const ParamReader& p)
{
    const int d = p.get_int("d");
    if (d < 2 || d > clifford::kDefaultMaxDim || d % 2 != 0)
        throw ConfigError("d must be even with 2 <= d <= " + std::to_string(clifford::kDefaultMaxDim));
    return d;
}

rmatrix::CoefficientTable dump_table(const ParamReader& p)
{
    try {
        return rmatrix::coefficients(dump_d(p), p.get_rational("u"),
                                     rmatrix::parse_normalization(p.get_string("norm")));
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
}

}  // namespace

ordered_json dump_object(const std::string& object, const json& params, const Settings& settings)
{
    json merged = {{"d", settings.d_list.front()}, {"u", settings.u}, {"norm", settings.norm}, {"rep", settings.rep}};
    merged.update(params);
    const ParamReader p("dump " + object, merged);

    if (object == "gamma") {
        const auto basis = clifford::build_gamma(dump_d(p));
        ordered_json j;
        j["d"] = basis.d;
        j["alpha"] = kernel::to_string(basis.alpha);
        ordered_json gs = ordered_json::array();
        for (const auto& g : basis.gammas)
            gs.push_back(matrix_rows(g));
        j["gammas"] = std::move(gs);
        j["gamma5"] = matrix_rows(basis.gamma5);
        return j;
    }
    if (object == "coeffs") {
        ordered_json arr = ordered_json::array();
        for (const auto& x : dump_table(p).values)
            arr.push_back(kernel::to_string(x));
        return arr;
    }
    if (object == "rmatrix") {
        const auto table = dump_table(p);
        rmatrix::RepChoice rep;
        try {
            rep = rmatrix::parse_rep(p.get_string("rep"));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        const auto basis = clifford::build_gamma(table.d);
        const auto R = rmatrix::assemble_spinor_R(basis, table, rep);
        ordered_json j;
        j["d"] = table.d;
        j["u"] = kernel::to_string(table.u);
        j["norm"] = rmatrix::to_string(table.norm);
        j["rep"] = rmatrix::to_string(rep);
        j["dim"] = R.dim();
        j["nnz"] = R.nnz();
        ordered_json entries = ordered_json::array();
        R.for_each([&](std::size_t r, std::size_t c, const kernel::ExactScalar& v) {
            entries.push_back(ordered_json::array({r, c, kernel::to_string(v)}));
        });
        j["entries"] = std::move(entries);
        return j;
    }
    if (object == "report-schema")
        return report_schema();
    throw ConfigError("unknown dump object '" + object + "' (gamma, coeffs, rmatrix, report-schema)");
}

ordered_json report_schema()
{
    ordered_json props;
    props["check"] = {{"type", "string"}};
    props["params"] = {{"type", "object"}, {"additionalProperties", {{"type", "string"}}}};
    props["status"] = {{"enum", {"PASS", "FAIL", "SKIPPED"}}};
    props["exact"] = {{"type", "boolean"}};
    props["max_residual"] = {{"type", {"number", "null"}}};
    props["elapsed_ms"] = {{"type", "integer"}, {"minimum", 0}};
    props["detail"] = {{"type", {"string", "null"}}};
    props["schema_version"] = {{"const", kSchemaVersion}};

    ordered_json s;
    s["$schema"] = "https://json-schema.org/draft/2020-12/schema";
    s["title"] = "ybv check report";
    s["type"] = "object";
    s["required"] = {"check", "params", "status", "exact", "max_residual", "elapsed_ms", "detail", "schema_version"};
    s["additionalProperties"] = false;
    s["properties"] = std::move(props);
    return s;
}

}  // namespace ybv::cli
