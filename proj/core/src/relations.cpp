#include "ybv/relations.hpp"

#include "ybv/clifford.hpp"

#include <cstdlib>
#include <sstream>

namespace ybv {

std::string to_string(Status s)
{
    switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
    }
    return "?";
}

std::size_t default_budget_dim()
{
    if (const char* env = std::getenv("YBV_BUDGET_DIM")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return kDefaultBudgetDim;
}

}  // namespace ybv

namespace ybv::relations {

using clifford::GammaBasis;
using kernel::ExactScalar;
using kernel::kron;
using kernel::matmul;
using kernel::SparseOperator;
using rmatrix::CoefficientTable;
using rmatrix::FactoredFunction;
using rmatrix::Parity;
using rmatrix::SpinorTerms;

namespace {

std::string str(const Rational& q) { return kernel::to_string(q); }

// Accumulates exact comparisons; the first failure is kept with its location.
class Verdict {
public:
    bool equal(const std::string& label, const SparseOperator& lhs, const SparseOperator& rhs)
    {
        if (failure_)
            return false;
        if (auto m = kernel::first_difference(lhs, rhs)) {
            failure_ = label + ": " + kernel::describe(*m);
            return false;
        }
        return true;
    }

    bool zero(const std::string& label, const SparseOperator& op)
    {
        return equal(label, op, SparseOperator::zero(op.dim()));
    }

    bool require(const std::string& label, bool ok, const std::string& why = {})
    {
        if (failure_)
            return false;
        if (!ok)
            failure_ = label + (why.empty() ? "" : ": " + why);
        return ok;
    }

    bool failed() const { return failure_.has_value(); }

    CheckReport report(std::string id, std::map<std::string, std::string> params, const Stopwatch& sw,
                       std::string pass_detail) const
    {
        CheckReport r;
        r.check_id = std::move(id);
        r.params = std::move(params);
        r.exact = true;
        r.status = failure_ ? Status::Fail : Status::Pass;
        r.detail = failure_ ? *failure_ : std::move(pass_detail);
        r.elapsed_ms = sw.elapsed_ms();
        return r;
    }

private:
    std::optional<std::string> failure_;
};

CheckReport skipped(std::string id, std::map<std::string, std::string> params, std::size_t dim, std::size_t budget)
{
    CheckReport r;
    r.check_id = std::move(id);
    r.params = std::move(params);
    r.status = Status::Skipped;
    r.exact = true;
    r.detail = "operator dimension " + std::to_string(dim) + " reaches the budget " + std::to_string(budget);
    return r;
}

std::size_t ipow2(int e) { return std::size_t{1} << e; }

CoefficientTable table_at(int d, const Rational& w, Normalization norm, const CheckOptions& opts)
{
    CoefficientTable t = rmatrix::coefficients(d, w, norm);
    if (opts.perturb_k) {
        const int k = *opts.perturb_k;
        if (k < 0 || k > d)
            throw std::invalid_argument("perturb index outside 0..d");
        t.values[static_cast<std::size_t>(k)] += ExactScalar(1);
    }
    return t;
}

// op on V⊗W placed on slots 1 and 3 of V⊗X⊗W, identity on X (dim p).
SparseOperator embed13(const SparseOperator& op, std::size_t n, std::size_t p, std::size_t m)
{
    if (op.dim() != n * m)
        throw std::invalid_argument("embed13: dimension mismatch");
    std::vector<kernel::Triplet> t;
    t.reserve(op.nnz() * p);
    op.for_each([&](std::size_t r, std::size_t c, const ExactScalar& v) {
        const std::size_t i = r / m, k = r % m, j = c / m, l = c % m;
        for (std::size_t x = 0; x < p; ++x)
            t.push_back({(i * p + x) * m + k, (j * p + x) * m + l, v});
    });
    return SparseOperator(n * p * m, std::move(t));
}

std::map<std::string, std::string> spectral_params(int d, const Rational& u, const Rational& v, Normalization norm,
                                                   RepChoice rep)
{
    return {{"d", std::to_string(d)}, {"u", str(u)}, {"v", str(v)}, {"norm", rmatrix::to_string(norm)},
            {"rep", rmatrix::to_string(rep)}};
}

void add_perturbation(std::map<std::string, std::string>& params, const CheckOptions& opts)
{
    if (opts.perturb_k)
        params["perturb"] = std::to_string(*opts.perturb_k);
}

Rational binomial(int n, int k)
{
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

Rational factorial(int n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

}  // namespace

std::size_t ybe_dimension(int d) { return ipow2(3 * d / 2); }

CheckReport check_clifford(int d)
{
    Stopwatch sw;
    Verdict verdict;
    GammaBasis b = clifford::build_gamma(d);
    const std::int64_t build_ms = sw.elapsed_ms();
    const std::size_t n = b.spinor_dim();
    const SparseOperator one = SparseOperator::identity(n);
    for (int a = 1; a <= d; ++a)
        for (int c = 1; c <= d; ++c)
            verdict.equal("{g" + std::to_string(a) + ",g" + std::to_string(c) + "}",
                          kernel::anticommutator(b.gamma(a), b.gamma(c)), a == c ? one.scaled(2) : SparseOperator::zero(n));
    verdict.equal("gamma5^2", matmul(b.gamma5, b.gamma5), one);
    for (int a = 1; a <= d; ++a)
        verdict.zero("{gamma5,g" + std::to_string(a) + "}", kernel::anticommutator(b.gamma5, b.gamma(a)));
    std::vector<ExactScalar> diag;
    for (std::size_t i = 0; i < n; ++i)
        diag.emplace_back(i < n / 2 ? 1 : -1);
    verdict.equal("gamma5 = diag(+1 block, -1 block)", b.gamma5, SparseOperator::diagonal(diag));
    const ExactScalar alpha_sq_expected((d / 2) % 2 == 0 ? 1 : -1);
    verdict.require("alpha^2", b.alpha * b.alpha == alpha_sq_expected, "alpha=" + kernel::to_string(b.alpha));
    verdict.equal("gamma_{1..d} = gamma5/alpha", clifford::antisym_product(b, clifford::full_index(d)),
                  b.gamma5.scaled(ExactScalar(1) / b.alpha));
    verdict.require("tr gamma5", b.gamma5.trace().is_zero());
    for (int k = 0; k <= d; ++k)
        verdict.zero("gamma5 pair reflection k=" + std::to_string(k), clifford::gamma5_pair_reflection(b, k));
    return verdict.report("clifford", {{"d", std::to_string(d)}}, sw,
                          "alpha=" + kernel::to_string(b.alpha) + "; build_ms=" + std::to_string(build_ms));
}

CheckReport check_coefficients(int d, const Rational& u, Normalization norm)
{
    Stopwatch sw;
    Verdict verdict;
    CoefficientTable t = rmatrix::coefficients(d, u, norm);
    if (auto why = rmatrix::table_invariant_violation(t))
        verdict.require("table invariants", false, *why);
    if (norm == Normalization::Product || norm == Normalization::Beta) {
        CoefficientTable c = rmatrix::coefficients_closed_form(d, u, norm);
        for (int k = 0; k <= d; ++k)
            verdict.require("closed form R_" + std::to_string(k), t[k] == c[k],
                            kernel::to_string(t[k]) + " vs " + kernel::to_string(c[k]));
    }
    if (norm == Normalization::D6Paper) {
        const Rational r0 = (u + 4) / 8, r2 = -u / 8;
        const std::vector<Rational> expect{r0, 0, r2, 0, -r2, 0, -r0};
        for (int k = 0; k <= d; ++k)
            verdict.require("d6 table R_" + std::to_string(k), t[k] == ExactScalar(expect[static_cast<std::size_t>(k)]),
                            kernel::to_string(t[k]));
    }
    std::string values;
    for (int k = 0; k <= d; ++k)
        values += (k ? "," : "") + kernel::to_string(t[k]);
    return verdict.report("coefficients", {{"d", std::to_string(d)}, {"u", str(u)}, {"norm", rmatrix::to_string(norm)}},
                          sw, "R=[" + values + "]");
}

CheckReport check_ybe(int d, const Rational& u, const Rational& v, Normalization norm, RepChoice rep,
                      const CheckOptions& opts)
{
    auto params = spectral_params(d, u, v, norm, rep);
    add_perturbation(params, opts);
    if (d < 2 || d % 2 != 0 || d > clifford::kDefaultMaxDim)
        throw std::invalid_argument("d must be even with 2 <= d <= 8");
    const std::size_t dim = ybe_dimension(d);
    if (dim >= opts.budget_dim)
        return skipped("ybe", params, dim, opts.budget_dim);
    Stopwatch sw;
    Verdict verdict;
    GammaBasis b = clifford::build_gamma(d);
    SpinorTerms terms(b, rep);
    const SparseOperator one = SparseOperator::identity(b.spinor_dim());
    auto R = [&](const Rational& w) { return terms.assemble(table_at(d, w, norm, opts)); };
    const SparseOperator Ru = R(u), Rv = R(v), Ruv = R(u + v);
    const SparseOperator lhs = matmul(kron(Ru, one), matmul(kron(one, Ruv), kron(Rv, one)));
    const SparseOperator rhs = matmul(kron(one, Rv), matmul(kron(Ruv, one), kron(one, Ru)));
    verdict.equal("R12(u)R23(u+v)R12(v) = R23(v)R12(u+v)R23(u)", lhs, rhs);
    return verdict.report("ybe", params, sw,
                          "R12(u)R23(u+v)R12(v) = R23(v)R12(u+v)R23(u) on V(x)V(x)V, dim=" + std::to_string(dim));
}

CheckReport check_three_term(int d, const Rational& u, const Rational& v, std::array<int, 3> signs, Normalization norm,
                             RepChoice rep, const CheckOptions& opts)
{
    auto sign_char = [](int s) {
        if (s != 1 && s != -1)
            throw std::invalid_argument("three-term signs must be +1 or -1");
        return s > 0 ? '+' : '-';
    };
    const std::string label{sign_char(signs[0]), sign_char(signs[1]), sign_char(signs[2])};
    auto params = spectral_params(d, u, v, norm, rep);
    params["signs"] = label;
    add_perturbation(params, opts);
    const std::size_t dim = ybe_dimension(d);
    if (dim >= opts.budget_dim)
        return skipped("three_term", params, dim, opts.budget_dim);
    Stopwatch sw;
    Verdict verdict;
    GammaBasis b = clifford::build_gamma(d);
    SpinorTerms terms(b, rep);
    const SparseOperator one = SparseOperator::identity(b.spinor_dim());
    auto R = [&](const Rational& w, int s) {
        return terms.assemble(table_at(d, w, norm, opts), s > 0 ? Parity::Even : Parity::Odd);
    };
    const SparseOperator Ri_u = R(u, signs[0]), Rj_v = R(v, signs[1]), Rk_uv = R(u + v, signs[2]);
    const SparseOperator lhs = matmul(kron(Ri_u, one), matmul(kron(one, Rk_uv), kron(Rj_v, one)));
    const SparseOperator rhs = matmul(kron(one, Rj_v), matmul(kron(Rk_uv, one), kron(one, Ri_u)));
    verdict.equal("R^i12(u)R^k23(u+v)R^j12(v) = R^j23(v)R^k12(u+v)R^i23(u)", lhs, rhs);
    const int minus = (signs[0] < 0) + (signs[1] < 0) + (signs[2] < 0);
    std::string detail = "(i,j,k)=(" + label + ")";
    if (minus % 2 == 1) {
        verdict.zero("lhs product vanishes", lhs);
        verdict.zero("rhs product vanishes", rhs);
        detail += "; zero-product identities checked";
    }
    return verdict.report("three_term", params, sw, detail);
}

namespace {

CheckReport rll_common(const std::string& id, int d, const Rational& u, const Rational& v, const SparseOperator& Lu,
                       const SparseOperator& Lv, std::size_t m, Normalization norm, RepChoice rep,
                       std::map<std::string, std::string> params, const CheckOptions& opts)
{
    const std::size_t n = ipow2(d / 2);
    const std::size_t dim = n * n * m;
    if (dim >= opts.budget_dim)
        return skipped(id, params, dim, opts.budget_dim);
    Stopwatch sw;
    Verdict verdict;
    GammaBasis b = clifford::build_gamma(d);
    SpinorTerms terms(b, rep);
    const SparseOperator R12 = kron(terms.assemble(table_at(d, u - v, norm, opts)), SparseOperator::identity(m));
    const SparseOperator one = SparseOperator::identity(n);
    const SparseOperator L13u = embed13(Lu, n, n, m), L13v = embed13(Lv, n, n, m);
    const SparseOperator L23u = kron(one, Lu), L23v = kron(one, Lv);
    const SparseOperator lhs = matmul(R12, matmul(L13u, L23v));
    const SparseOperator rhs = matmul(L13v, matmul(L23u, R12));
    verdict.equal("R12(u-v)L13(u)L23(v) = L13(v)L23(u)R12(u-v)", lhs, rhs);
    return verdict.report(id, std::move(params), sw,
                          "R12(u-v)L13(u)L23(v) = L13(v)L23(u)R12(u-v), dim=" + std::to_string(dim));
}

}  // namespace

CheckReport check_rll_fundamental(int d, const Rational& u, const Rational& v, Normalization norm, RepChoice rep,
                                  const CheckOptions& opts)
{
    GammaBasis b = clifford::build_gamma(d);
    auto params = spectral_params(d, u, v, norm, rep);
    add_perturbation(params, opts);
    return rll_common("rll_fundamental", d, u, v, rmatrix::fundamental_L0(b, u), rmatrix::fundamental_L0(b, v),
                      static_cast<std::size_t>(d), norm, rep, std::move(params), opts);
}

CheckReport check_rll_quantum(int d, const Rational& u, const Rational& v, const QuantumRep& q, Normalization norm,
                              RepChoice rep, const CheckOptions& opts)
{
    if (q.d != d)
        throw std::invalid_argument("check_rll_quantum: representation is not for so(" + std::to_string(d) + ")");
    if (auto why = rmatrix::so_relation_violation(q))
        throw std::invalid_argument("check_rll_quantum: invalid representation: " + *why);
    GammaBasis b = clifford::build_gamma(d);
    auto params = spectral_params(d, u, v, norm, rep);
    params["qrep"] = q.name;
    add_perturbation(params, opts);
    return rll_common("rll_quantum", d, u, v, rmatrix::quantum_L(b, u, q), rmatrix::quantum_L(b, v, q), q.m, norm, rep,
                      std::move(params), opts);
}

CheckReport check_asym(const QuantumRep& q)
{
    Stopwatch sw;
    Verdict verdict;
    static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    static const int perm_sign[6] = {1, 1, 1, -1, -1, -1};
    std::size_t tested = 0;
    for (int a = 1; a <= q.d && !verdict.failed(); ++a)
        for (int b = a + 1; b <= q.d && !verdict.failed(); ++b)
            for (int c = b + 1; c <= q.d && !verdict.failed(); ++c)
                for (int e = 1; e <= q.d && !verdict.failed(); ++e) {
                    const int idx[3] = {a, b, c};
                    std::vector<SparseOperator> parts;
                    std::vector<ExactScalar> coeffs;
                    for (int p = 0; p < 6; ++p) {
                        const int x = idx[perms[p][0]], y = idx[perms[p][1]], z = idx[perms[p][2]];
                        parts.push_back(kernel::anticommutator(q.M(x, y), q.M(z, e)));
                        coeffs.emplace_back(perm_sign[p]);
                    }
                    std::vector<const SparseOperator*> ptrs;
                    for (const auto& p : parts)
                        ptrs.push_back(&p);
                    verdict.zero("{M_[ab,M_c]e} at (a,b,c,e)=(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                     std::to_string(c) + "," + std::to_string(e) + ")",
                                 kernel::linear_combination(coeffs, ptrs));
                    ++tested;
                }
    return verdict.report("asym", {{"d", std::to_string(q.d)}, {"qrep", q.name}}, sw,
                          std::to_string(tested) + " index tuples vanish");
}

std::pair<Rational, Rational> unitarity_binomial(int d, const Rational& u, Normalization norm)
{
    const CoefficientTable p = rmatrix::coefficients(d, u, norm), m = rmatrix::coefficients(d, -u, norm);
    Rational hp = 0, hm = 0;
    for (int k = 0; k <= d; ++k) {
        Rational term = 2 * binomial(d, k) * (p[k] * m[k]).re();
        (k % 2 == 0 ? hp : hm) += term;
    }
    return {hp, hm};
}

std::pair<Rational, Rational> unitarity_product(int d, const Rational& u, Normalization norm)
{
    const auto fn = rmatrix::coefficient_functions(d, norm);
    const auto prod = rmatrix::coefficient_functions(d, Normalization::Product);
    const FactoredFunction A = fn[0] / prod[0], B = fn[1] / prod[1];
    auto shell = [](int k) {
        // k² − u² = −(u+k)(u−k)
        return FactoredFunction::constant(-1) * FactoredFunction::linear(k) * FactoredFunction::linear(-k);
    };
    FactoredFunction hp = A * A.reflected(), hm = B * B.reflected();
    for (int k = 0; k < d / 2; ++k)
        hp *= shell(k);
    for (int k = 1; k < d / 2; ++k)
        hm *= shell(k);
    return {hp.evaluate(u), hm.evaluate(u)};
}

CheckReport check_unitarity(int d, const Rational& u, Normalization norm, RepChoice rep)
{
    Stopwatch sw;
    Verdict verdict;
    const auto [bp, bm] = unitarity_binomial(d, u, norm);
    const auto [pp, pm] = unitarity_product(d, u, norm);
    verdict.require("h+ binomial = product", bp == pp, str(bp) + " vs " + str(pp));
    verdict.require("h- binomial = product", bm == pm, str(bm) + " vs " + str(pm));
    GammaBasis b = clifford::build_gamma(d);
    SpinorTerms terms(b, rep);
    const CoefficientTable tu = rmatrix::coefficients(d, u, norm), tm = rmatrix::coefficients(d, -u, norm);
    const SparseOperator Rp_u = terms.assemble(tu, Parity::Even), Rp_m = terms.assemble(tm, Parity::Even);
    const SparseOperator Rm_u = terms.assemble(tu, Parity::Odd), Rm_m = terms.assemble(tm, Parity::Odd);
    const auto P = rmatrix::projectors(b);
    // Dressing the odd part with gamma5 on one factor flips the sign of h-.
    const Rational odd_sign = rep == RepChoice::Naive ? 1 : -1;
    verdict.equal("R+(u)R+(-u) = h+ P+", matmul(Rp_u, Rp_m), P.plus.scaled(ExactScalar(bp)));
    verdict.equal("R-(u)R-(-u) = h- P-", matmul(Rm_u, Rm_m), P.minus.scaled(ExactScalar(Rational(odd_sign * bm))));
    verdict.zero("R+(u)R-(-u) = 0", matmul(Rp_u, Rm_m));
    verdict.zero("R-(u)R+(-u) = 0", matmul(Rm_u, Rp_m));
    return verdict.report("unitarity",
                          {{"d", std::to_string(d)}, {"u", str(u)}, {"norm", rmatrix::to_string(norm)},
                           {"rep", rmatrix::to_string(rep)}},
                          sw, "h+=" + str(bp) + "; h-=" + str(bm));
}

CheckReport check_symmetries(int d, const Rational& u, Normalization norm, RepChoice rep)
{
    Stopwatch sw;
    Verdict verdict;
    GammaBasis b = clifford::build_gamma(d);
    SpinorTerms terms(b, rep);
    const CoefficientTable t = rmatrix::coefficients(d, u, norm);
    const SparseOperator one = SparseOperator::identity(b.spinor_dim());
    const SparseOperator g55 = kron(b.gamma5, b.gamma5);
    for (Parity parity : {Parity::Even, Parity::Odd, Parity::Full}) {
        const SparseOperator R = terms.assemble(t, parity);
        const std::string tag = " (" + rmatrix::to_string(parity) + ")";
        for (int a = 1; a <= d; ++a)
            for (int c = a + 1; c <= d; ++c) {
                const SparseOperator gac = matmul(b.gamma(a), b.gamma(c));
                const SparseOperator G = kron(gac, one) + kron(one, gac);
                verdict.zero("[g" + std::to_string(a) + std::to_string(c) + " spin generator, R]" + tag,
                             kernel::commutator(G, R));
            }
        verdict.zero("[gamma5(x)gamma5, R]" + tag, kernel::commutator(g55, R));
    }
    return verdict.report("symmetries",
                          {{"d", std::to_string(d)}, {"u", str(u)}, {"norm", rmatrix::to_string(norm)},
                           {"rep", rmatrix::to_string(rep)}},
                          sw, "R commutes with spin(d) generators and gamma5(x)gamma5");
}

namespace {

// Block of op on V_s⊗V_t with V_± the chirality halves, as a (h²)-dimensional operator.
SparseOperator weyl_block(const SparseOperator& op, std::size_t n, bool s_plus, bool t_plus)
{
    const std::size_t h = n / 2;
    auto local = [&](std::size_t idx, std::size_t& out) {
        const std::size_t i = idx / n, j = idx % n;
        const bool ip = i < h, jp = j < h;
        if (ip != s_plus || jp != t_plus)
            return false;
        out = (i % h) * h + (j % h);
        return true;
    };
    std::vector<kernel::Triplet> t;
    op.for_each([&](std::size_t r, std::size_t c, const ExactScalar& v) {
        std::size_t lr, lc;
        if (local(r, lr) && local(c, lc))
            t.push_back({lr, lc, v});
    });
    return SparseOperator(h * h, std::move(t));
}

}  // namespace

CheckReport check_d6_reduction(const Rational& u)
{
    Stopwatch sw;
    Verdict verdict;
    const int d = 6;
    GammaBasis b = clifford::build_gamma(d);
    const SparseOperator R = rmatrix::assemble_spinor_R(b, rmatrix::coefficients(d, u, Normalization::D6Paper),
                                                        RepChoice::Naive);
    const std::size_t n = b.spinor_dim(), h = n / 2;
    verdict.zero("V+(x)V- block", weyl_block(R, n, true, false));
    verdict.zero("V-(x)V+ block", weyl_block(R, n, false, true));
    std::vector<kernel::Triplet> swap;
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j)
            swap.push_back({i * h + j, j * h + i, ExactScalar(1)});
    const SparseOperator P(h * h, std::move(swap));
    const SparseOperator yang = SparseOperator::identity(h * h) + P.scaled(ExactScalar(u));
    verdict.equal("V-(x)V- block = 1 + uP", weyl_block(R, n, false, false), yang);
    verdict.equal("V+(x)V+ block = 1 + uP", weyl_block(R, n, true, true), yang);
    return verdict.report("d6_reduction", {{"u", str(u)}, {"norm", "d6paper"}}, sw,
                          "Weyl blocks of R on 4-dimensional half-spinors");
}

CheckReport check_exchange_identities(int d)
{
    Stopwatch sw;
    Verdict verdict;
    GammaBasis b = clifford::build_gamma(d);
    const clifford::GradedRep rep2 = clifford::graded_rep(b, 2);
    const auto [P, Pp] = clifford::exchange_pair(rep2);
    for (int a = 1; a <= d; ++a) {
        verdict.equal("G2a P = P G1a, a=" + std::to_string(a), matmul(rep2.op(2, a), P), matmul(P, rep2.op(1, a)));
        verdict.equal("G1a P' = P' G2a, a=" + std::to_string(a), matmul(rep2.op(1, a), Pp), matmul(Pp, rep2.op(2, a)));
    }
    const Rational two_d = Rational(mpz_class(1) << static_cast<mp_bitcnt_t>(d));
    const SparseOperator scalar = SparseOperator::identity(rep2.dim()).scaled(ExactScalar(two_d));
    verdict.equal("PP' = 2^d", matmul(P, Pp), scalar);
    verdict.equal("P'P = 2^d", matmul(Pp, P), scalar);
    // (1/d!) As(G1.G2)^d is represented by the top term of the exponential, s_d T_d.
    const auto terms = clifford::exponential_terms(rep2, 1, 2);
    const SparseOperator top = terms[static_cast<std::size_t>(d)].scaled(ExactScalar(clifford::reversal_sign(d)));
    const SparseOperator g55 = kron(b.gamma5, b.gamma5);
    verdict.equal("PP = 2^d s_d T_d", matmul(P, P), top.scaled(ExactScalar(two_d)));
    verdict.equal("P'P' = 2^d s_d T_d", matmul(Pp, Pp), top.scaled(ExactScalar(two_d)));
    verdict.equal("s_d T_d = gamma5(x)gamma5", top, g55);

    const clifford::GradedRep rep3 = clifford::graded_rep(b, 3);
    const auto t12 = clifford::exponential_terms(rep3, 1, 2), t23 = clifford::exponential_terms(rep3, 2, 3);
    for (int s : {-1, 1}) {
        const SparseOperator A = clifford::as_exponential(t12, Rational(s)), B = clifford::as_exponential(t23, Rational(s));
        verdict.equal(std::string(s < 0 ? "P" : "P'") + " braid", matmul(A, matmul(B, A)), matmul(B, matmul(A, B)));
    }
    return verdict.report("exchange_identities", {{"d", std::to_string(d)}}, sw,
                          "P=E12(-1), P'=E12(1); intertwining, PP', PP, braid");
}

CheckReport check_unit_gen(int d, const Rational& x, const Rational& y)
{
    if (x * y == 1)
        throw std::invalid_argument("unit_gen: xy = 1 is excluded");
    Stopwatch sw;
    Verdict verdict;
    GammaBasis b = clifford::build_gamma(d);
    const auto terms = clifford::exponential_terms(clifford::graded_rep(b, 2), 1, 2);
    const Rational w = 1 - x * y;
    Rational wd = 1;
    for (int i = 0; i < d; ++i)
        wd *= w;
    const SparseOperator lhs = matmul(clifford::as_exponential(terms, x), clifford::as_exponential(terms, y));
    const SparseOperator rhs = clifford::as_exponential(terms, Rational((x + y) / w)).scaled(ExactScalar(wd));
    verdict.equal("E(x)E(y) = (1-xy)^d E((x+y)/(1-xy))", lhs, rhs);
    return verdict.report("unit_gen", {{"d", std::to_string(d)}, {"x", str(x)}, {"y", str(y)}}, sw,
                          "generating-function product law on two graded copies");
}

CheckReport check_fundamental_ybe(int d, const Rational& u, const Rational& v)
{
    Stopwatch sw;
    Verdict verdict;
    const std::size_t n = static_cast<std::size_t>(d);
    const SparseOperator one = SparseOperator::identity(n);
    const SparseOperator Ruv = rmatrix::fundamental_R0(d, u - v), Ru = rmatrix::fundamental_R0(d, u),
                         Rv = rmatrix::fundamental_R0(d, v);
    const SparseOperator lhs = matmul(kron(Ruv, one), matmul(kron(one, Ru), kron(Rv, one)));
    const SparseOperator rhs = matmul(kron(one, Rv), matmul(kron(Ru, one), kron(one, Ruv)));
    verdict.equal("R012(u-v)R023(u)R012(v) = R023(v)R012(u)R023(u-v)", lhs, rhs);
    return verdict.report("fundamental_ybe", {{"d", std::to_string(d)}, {"u", str(u)}, {"v", str(v)}}, sw,
                          "R012(u-v)R023(u)R012(v) = R023(v)R012(u)R023(u-v) on V0(x)V0(x)V0");
}

CheckReport check_epsilon_projector_limit(int d)
{
    Stopwatch sw;
    Verdict verdict;
    GammaBasis b = clifford::build_gamma(d);
    const auto fns = rmatrix::coefficient_functions(d, Normalization::Product);
    std::vector<ExactScalar> limits;
    std::string detail = "lim R_k/u =";
    for (int k = 0; k <= d; ++k) {
        Rational l = k % 2 == 0 ? fns[static_cast<std::size_t>(k)].limit(0, 1, k) : Rational(0);
        if (k % 2 == 0)
            detail += " " + str(l);
        limits.emplace_back(l);
    }
    const SparseOperator lhs = SpinorTerms(b, RepChoice::Naive).assemble(limits, Parity::Even);
    const Rational gamma_half_d = factorial(d / 2 - 1);
    verdict.equal("lim R+(u)/u = Gamma(d/2) P+", lhs, rmatrix::projectors(b).plus.scaled(ExactScalar(gamma_half_d)));
    return verdict.report("epsilon_projector_limit", {{"d", std::to_string(d)}, {"norm", "product"}}, sw,
                          detail + "; Gamma(d/2)=" + str(gamma_half_d));
}

}  // namespace ybv::relations
