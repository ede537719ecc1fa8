#include "ybv/rmatrix.hpp"

#include <cmath>
#include <sstream>

namespace ybv::rmatrix {

using kernel::kron;
using kernel::matmul;
using kernel::Triplet;

// ---------------------------------------------------------------------------
// FactoredFunction

FactoredFunction FactoredFunction::constant(Rational c)
{
    FactoredFunction f;
    f.c_ = std::move(c);
    return f;
}

FactoredFunction FactoredFunction::linear(Rational shift)
{
    FactoredFunction f;
    f.c_ = 1;
    f.factors_[shift] = 1;
    return f;
}

FactoredFunction& FactoredFunction::operator*=(const FactoredFunction& o)
{
    c_ *= o.c_;
    if (sgn(c_) == 0) {
        factors_.clear();
        return *this;
    }
    for (const auto& [r, m] : o.factors_) {
        int& mine = factors_[r];
        mine += m;
        if (mine == 0)
            factors_.erase(r);
    }
    return *this;
}

FactoredFunction& FactoredFunction::operator/=(const FactoredFunction& o)
{
    if (o.is_zero())
        throw std::domain_error("FactoredFunction: division by the zero function");
    FactoredFunction inv;
    inv.c_ = 1 / o.c_;
    for (const auto& [r, m] : o.factors_)
        inv.factors_[r] = -m;
    return *this *= inv;
}

FactoredFunction FactoredFunction::reflected() const
{
    FactoredFunction f;
    f.c_ = c_;
    for (const auto& [r, m] : factors_) {
        f.factors_[-r] = m;
        if (m % 2 != 0)
            f.c_ = -f.c_;
    }
    return f;
}

int FactoredFunction::order_at(const Rational& u0) const
{
    auto it = factors_.find(-u0);
    return it == factors_.end() ? 0 : it->second;
}

namespace {

Rational ipow(const Rational& x, int m)
{
    Rational r = 1;
    for (int i = 0; i < std::abs(m); ++i)
        r *= x;
    return m < 0 ? Rational(1 / r) : r;
}

}  // namespace

Rational FactoredFunction::evaluate(const Rational& u, int k) const
{
    if (is_zero())
        return 0;
    Rational result = c_;
    for (const auto& [r, m] : factors_) {
        Rational v = u + r;
        if (sgn(v) == 0) {
            if (m > 0)
                return 0;
            throw PoleError(k, "pole at u=" + kernel::to_string(u) + (k >= 0 ? " in R_" + std::to_string(k) : ""));
        }
        result *= ipow(v, m);
    }
    return result;
}

Rational FactoredFunction::limit(const Rational& u0, int p, int k) const
{
    if (is_zero())
        return 0;
    const int ord = order_at(u0) - p;
    if (ord < 0)
        throw PoleError(k, "divergent limit at u=" + kernel::to_string(u0));
    if (ord > 0)
        return 0;
    Rational result = c_;
    for (const auto& [r, m] : factors_)
        if (r != -u0)
            result *= ipow(u0 + r, m);
    return result;
}

std::string FactoredFunction::to_string() const
{
    std::ostringstream os;
    os << kernel::to_string(c_);
    for (const auto& [r, m] : factors_) {
        os << "*(u";
        if (sgn(r) > 0)
            os << "+" << kernel::to_string(r);
        else if (sgn(r) < 0)
            os << kernel::to_string(r);
        os << ")";
        if (m != 1)
            os << "^" << m;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Names

std::string to_string(Normalization n)
{
    switch (n) {
    case Normalization::Unit: return "unit";
    case Normalization::Product: return "product";
    case Normalization::Beta: return "beta";
    case Normalization::D6Paper: return "d6paper";
    }
    return "?";
}

std::string to_string(RepChoice r)
{
    switch (r) {
    case RepChoice::Naive: return "naive";
    case RepChoice::Primed: return "primed";
    case RepChoice::DoublePrimed: return "doubleprimed";
    }
    return "?";
}

std::string to_string(Parity p)
{
    switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Full: return "full";
    }
    return "?";
}

Normalization parse_normalization(std::string_view s)
{
    if (s == "unit")
        return Normalization::Unit;
    if (s == "product")
        return Normalization::Product;
    if (s == "beta")
        return Normalization::Beta;
    if (s == "d6paper")
        return Normalization::D6Paper;
    throw std::invalid_argument("unknown normalization '" + std::string(s) + "'");
}

RepChoice parse_rep(std::string_view s)
{
    if (s == "naive")
        return RepChoice::Naive;
    if (s == "primed")
        return RepChoice::Primed;
    if (s == "doubleprimed")
        return RepChoice::DoublePrimed;
    throw std::invalid_argument("unknown rep choice '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// Coefficients

namespace {

void require_dimension(int d)
{
    if (d < 2 || d % 2 != 0 || d > clifford::kDefaultMaxDim)
        throw std::invalid_argument("d must be even with 2 <= d <= " + std::to_string(clifford::kDefaultMaxDim));
}

Rational poch(const Rational& x, int n)
{
    Rational r = 1;
    for (int i = 0; i < n; ++i)
        r *= x + i;
    return r;
}

// Γ-ratio bases of the beta normalization are singular at nonpositive integers u.
void require_beta_regular(int d, const Rational& u)
{
    if (u.get_den() != 1 || sgn(u) > 0)
        return;
    const long n = u.get_num().get_si();
    for (int k = 0; k <= d; ++k) {
        const int j = k / 2;
        bool pole;
        // 2Γ-arguments: even (2j+u, u+d−2j), odd (2j+u+1, u+d−1−2j); a pole is a nonpositive even integer.
        auto bad = [](long twice) { return twice <= 0 && twice % 2 == 0; };
        if (k % 2 == 0)
            pole = bad(2 * j + n) || bad(n + d - 2 * j);
        else
            pole = bad(2 * j + n + 1) || bad(n + d - 1 - 2 * j);
        if (pole)
            throw PoleError(k, "beta normalization is singular at u=" + kernel::to_string(u) + " (R_" +
                                   std::to_string(k) + ")");
    }
}

FactoredFunction pochhammer_half(int shift, int n)
{
    // ((u+shift)/2)_n = 2^{−n} Π_{i<n} (u + shift + 2i)
    FactoredFunction f = FactoredFunction::constant(ipow(Rational(2), -n));
    for (int i = 0; i < n; ++i)
        f *= FactoredFunction::linear(Rational(shift + 2 * i));
    return f;
}

}  // namespace

std::vector<FactoredFunction> coefficient_functions(int d, Normalization norm)
{
    require_dimension(d);
    std::vector<FactoredFunction> R(static_cast<std::size_t>(d) + 1);
    switch (norm) {
    case Normalization::Unit:
    case Normalization::Beta:
        R[0] = FactoredFunction::constant(1);
        R[1] = FactoredFunction::constant(1);
        break;
    case Normalization::Product:
        R[0] = pochhammer_half(0, d / 2);
        R[1] = pochhammer_half(1, d / 2 - 1) * FactoredFunction::constant(Rational(1, 2));
        break;
    case Normalization::D6Paper:
        if (d != 6)
            throw std::invalid_argument("d6paper normalization requires d = 6");
        R[0] = FactoredFunction::linear(4) * FactoredFunction::constant(Rational(1, 8));
        R[1] = FactoredFunction::constant(0);
        break;
    }
    for (int k = 0; k + 2 <= d; ++k) {
        FactoredFunction step = FactoredFunction::constant(-1) * FactoredFunction::linear(k);
        step /= FactoredFunction::linear(d - 2 - k);
        R[static_cast<std::size_t>(k) + 2] = R[static_cast<std::size_t>(k)] * step;
    }
    return R;
}

CoefficientTable coefficients(int d, const Rational& u, Normalization norm)
{
    auto fns = coefficient_functions(d, norm);
    if (norm == Normalization::Beta)
        require_beta_regular(d, u);
    CoefficientTable t{d, u, norm, {}};
    for (int k = 0; k <= d; ++k)
        t.values.emplace_back(fns[static_cast<std::size_t>(k)].evaluate(u, k));
    return t;
}

CoefficientTable coefficients_closed_form(int d, const Rational& u, Normalization norm)
{
    require_dimension(d);
    if (norm != Normalization::Product && norm != Normalization::Beta)
        throw std::invalid_argument("closed form exists for product and beta normalizations only");
    if (norm == Normalization::Beta)
        require_beta_regular(d, u);
    const Rational half_u = u / 2, half_u1 = (u + 1) / 2;
    CoefficientTable t{d, u, norm, {}};
    for (int k = 0; k <= d; ++k) {
        const int j = k / 2;
        const Rational sign = (j % 2 == 0) ? 1 : -1;
        Rational v;
        if (norm == Normalization::Product) {
            if (k % 2 == 0)
                v = sign * poch(half_u, j) * poch(half_u, d / 2 - j);
            else
                v = sign * poch(half_u1, j) * poch(half_u1, d / 2 - 1 - j) / 2;
        } else {
            Rational num = k % 2 == 0 ? poch(half_u, j) : poch(half_u1, j);
            Rational den = k % 2 == 0 ? poch((u + d) / 2 - j, j) : poch((u + d - 1) / 2 - j, j);
            if (sgn(den) == 0)
                throw PoleError(k, "pole at u=" + kernel::to_string(u) + " in R_" + std::to_string(k));
            v = sign * num / den;
        }
        t.values.emplace_back(std::move(v));
    }
    return t;
}

std::optional<std::string> table_invariant_violation(const CoefficientTable& t)
{
    const int d = t.d;
    for (int k = 0; k + 2 <= d; ++k) {
        ExactScalar lhs = t[k + 2] * ExactScalar(Rational(k - (t.u + d - 2)));
        ExactScalar rhs = t[k] * ExactScalar(Rational(t.u + k));
        if (lhs != rhs)
            return "recurrence fails at k=" + std::to_string(k);
    }
    const ExactScalar s((d / 2) % 2 == 0 ? 1 : -1);
    for (int k = 0; k <= d; ++k) {
        ExactScalar expect = k % 2 == 0 ? s * t[d - k] : -s * t[d - k];
        if (t[k] != expect)
            return "reciprocity fails at k=" + std::to_string(k);
    }
    return std::nullopt;
}

namespace {

double beta_fn(double x, double y)
{
    if (x <= 0.0 || y <= 0.0)
        throw std::domain_error("beta function needs positive arguments");
    return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

}  // namespace

std::pair<double, double> beta_scales(int d, double u)
{
    return {beta_fn(u / 2, (u + d) / 2), beta_fn((u + 1) / 2, (u + d - 1) / 2)};
}

std::vector<double> beta_form_values(int d, double u)
{
    require_dimension(d);
    std::vector<double> v;
    for (int k = 0; k <= d; ++k) {
        const int j = k / 2;
        const double sign = j % 2 == 0 ? 1.0 : -1.0;
        v.push_back(k % 2 == 0 ? sign * beta_fn(j + u / 2, (u + d) / 2 - j)
                               : sign * beta_fn(j + (u + 1) / 2, (u + d - 1) / 2 - j));
    }
    return v;
}

// ---------------------------------------------------------------------------
// Assembly

SpinorTerms::SpinorTerms(const GammaBasis& basis, RepChoice rep) : d_(basis.d), rep_(rep)
{
    const SparseOperator one = SparseOperator::identity(basis.spinor_dim());
    const SparseOperator dress_primed = kron(basis.gamma5, one);
    const SparseOperator dress_double = kron(one, basis.gamma5).scaled(ExactScalar(-1));
    for (int k = 0; k <= d_; ++k) {
        SparseOperator T = clifford::pair_sum(basis, k);
        if (k % 2 == 1 && rep == RepChoice::Primed)
            T = matmul(T, dress_primed);
        else if (k % 2 == 1 && rep == RepChoice::DoublePrimed)
            T = matmul(T, dress_double);
        terms_.push_back(std::move(T));
    }
}

SparseOperator SpinorTerms::assemble(const std::vector<ExactScalar>& values, Parity parity) const
{
    if (values.size() != terms_.size())
        throw std::invalid_argument("coefficient table dimension does not match gamma basis");
    std::vector<ExactScalar> coeffs;
    std::vector<const SparseOperator*> ops;
    for (int k = 0; k <= d_; ++k) {
        if ((parity == Parity::Even && k % 2 == 1) || (parity == Parity::Odd && k % 2 == 0))
            continue;
        coeffs.push_back(values[static_cast<std::size_t>(k)]);
        ops.push_back(&terms_[static_cast<std::size_t>(k)]);
    }
    return kernel::linear_combination(coeffs, ops);
}

SparseOperator SpinorTerms::assemble(const CoefficientTable& table, Parity parity) const
{
    if (table.d != d_)
        throw std::invalid_argument("coefficient table dimension does not match gamma basis");
    return assemble(table.values, parity);
}

SparseOperator assemble_spinor_R(const GammaBasis& basis, const CoefficientTable& table, RepChoice rep, Parity parity)
{
    return SpinorTerms(basis, rep).assemble(table, parity);
}

ProjectorPair projectors(const GammaBasis& basis)
{
    const std::size_t n = basis.spinor_dim();
    const SparseOperator one = SparseOperator::identity(n * n);
    const SparseOperator g55 = kron(basis.gamma5, basis.gamma5);
    const ExactScalar half(Rational(1, 2));
    return {(one + g55).scaled(half), (one - g55).scaled(half)};
}

ProjectorPair weyl_projectors(const GammaBasis& basis)
{
    const SparseOperator one = SparseOperator::identity(basis.spinor_dim());
    const ExactScalar half(Rational(1, 2));
    return {(one + basis.gamma5).scaled(half), (one - basis.gamma5).scaled(half)};
}

SparseOperator fundamental_R0(int d, const Rational& u)
{
    if (d < 2)
        throw std::invalid_argument("fundamental_R0: d >= 2 required");
    const Rational den = u + kernel::make_rational(d, 2) - 1;
    if (sgn(den) == 0)
        throw PoleError(-1, "fundamental R-matrix has a pole at u=" + kernel::to_string(u));
    const Rational trace_coeff = -u / den;
    const std::size_t n = static_cast<std::size_t>(d);
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            t.push_back({i * n + j, j * n + i, ExactScalar(u)});
            t.push_back({i * n + j, i * n + j, ExactScalar(1)});
            t.push_back({i * n + i, j * n + j, ExactScalar(trace_coeff)});
        }
    return SparseOperator(n * n, std::move(t));
}

namespace {

SparseOperator matrix_unit(std::size_t m, std::size_t a, std::size_t b)
{
    return SparseOperator(m, {{a, b, ExactScalar(1)}});
}

}  // namespace

SparseOperator fundamental_L0(const GammaBasis& basis, const Rational& u)
{
    const std::size_t n = basis.spinor_dim(), m = static_cast<std::size_t>(basis.d);
    std::vector<SparseOperator> parts;
    std::vector<ExactScalar> coeffs;
    parts.push_back(SparseOperator::identity(n * m));
    coeffs.emplace_back(u);
    // −(1/4)[γ_a,γ_b] = −(1/2)γ_aγ_b for a ≠ b
    for (int a = 1; a <= basis.d; ++a)
        for (int b = 1; b <= basis.d; ++b) {
            if (a == b)
                continue;
            parts.push_back(kron(matmul(basis.gamma(a), basis.gamma(b)),
                                 matrix_unit(m, static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1))));
            coeffs.emplace_back(Rational(-1, 2));
        }
    std::vector<const SparseOperator*> ptrs;
    for (const auto& p : parts)
        ptrs.push_back(&p);
    return kernel::linear_combination(coeffs, ptrs);
}

SparseOperator QuantumRep::M(int a, int b) const
{
    if (a == b)
        return SparseOperator::zero(m);
    if (a < b)
        return generators.at({a, b});
    return generators.at({b, a}).scaled(ExactScalar(-1));
}

QuantumRep so_defining_rep(int d)
{
    if (d < 2)
        throw std::invalid_argument("so_defining_rep: d >= 2 required");
    QuantumRep q{d, static_cast<std::size_t>(d), "defining", {}};
    const ExactScalar i = ExactScalar::i();
    for (int a = 1; a <= d; ++a)
        for (int b = a + 1; b <= d; ++b) {
            const auto ua = static_cast<std::size_t>(a - 1), ub = static_cast<std::size_t>(b - 1);
            q.generators[{a, b}] = SparseOperator(q.m, {{ua, ub, i}, {ub, ua, -i}});
        }
    return q;
}

QuantumRep so_spinor_rep(const GammaBasis& basis)
{
    QuantumRep q{basis.d, basis.spinor_dim(), "spinor", {}};
    const ExactScalar half_i(Rational(0), Rational(1, 2));
    for (int a = 1; a <= basis.d; ++a)
        for (int b = a + 1; b <= basis.d; ++b)
            q.generators[{a, b}] = matmul(basis.gamma(a), basis.gamma(b)).scaled(half_i);
    return q;
}

std::optional<std::string> so_relation_violation(const QuantumRep& q)
{
    const ExactScalar i = ExactScalar::i();
    auto delta = [](int x, int y) { return ExactScalar(x == y ? 1 : 0); };
    for (int a = 1; a <= q.d; ++a)
        for (int b = 1; b <= q.d; ++b)
            for (int c = 1; c <= q.d; ++c)
                for (int e = 1; e <= q.d; ++e) {
                    // [M_ab, M_ec] = i(δ_be M_ac + δ_ac M_be − δ_ae M_bc − δ_bc M_ae)
                    SparseOperator lhs = kernel::commutator(q.M(a, b), q.M(e, c));
                    SparseOperator mac = q.M(a, c), mbe = q.M(b, e), mbc = q.M(b, c), mae = q.M(a, e);
                    SparseOperator rhs = kernel::linear_combination(
                        {i * delta(b, e), i * delta(a, c), -i * delta(a, e), -i * delta(b, c)}, {&mac, &mbe, &mbc, &mae});
                    if (auto mm = kernel::first_difference(lhs, rhs))
                        return "so relation fails for (a,b,d,c)=(" + std::to_string(a) + "," + std::to_string(b) +
                               "," + std::to_string(e) + "," + std::to_string(c) + "): " + kernel::describe(*mm);
                }
    return std::nullopt;
}

SparseOperator quantum_L(const GammaBasis& basis, const Rational& u, const QuantumRep& q)
{
    if (q.d != basis.d)
        throw std::invalid_argument("quantum_L: representation is for so(" + std::to_string(q.d) + ")");
    const std::size_t n = basis.spinor_dim();
    std::vector<SparseOperator> parts;
    std::vector<ExactScalar> coeffs;
    parts.push_back(SparseOperator::identity(n * q.m));
    coeffs.emplace_back(u);
    const ExactScalar half_i(Rational(0), Rational(1, 2));
    for (const auto& [ab, M] : q.generators) {
        parts.push_back(kron(matmul(basis.gamma(ab.first), basis.gamma(ab.second)), M));
        coeffs.push_back(half_i);
    }
    std::vector<const SparseOperator*> ptrs;
    for (const auto& p : parts)
        ptrs.push_back(&p);
    return kernel::linear_combination(coeffs, ptrs);
}

}  // namespace ybv::rmatrix
