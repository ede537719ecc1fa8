#include "ybv/clifford.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace ybv::clifford {

using kernel::kron;
using kernel::matmul;

namespace {

SparseOperator pauli_x()
{
    return SparseOperator::from_dense({{ExactScalar(0), ExactScalar(1)}, {ExactScalar(1), ExactScalar(0)}});
}

SparseOperator pauli_y()
{
    const ExactScalar i = ExactScalar::i();
    return SparseOperator::from_dense({{ExactScalar(0), -i}, {i, ExactScalar(0)}});
}

}  // namespace

GammaBasis build_gamma(int d, int max_d)
{
    if (d < 2 || d % 2 != 0 || d > max_d)
        throw std::invalid_argument("build_gamma: d must be even with 2 <= d <= " + std::to_string(max_d) +
                                    ", got " + std::to_string(d));
    const SparseOperator sx = pauli_x(), sy = pauli_y();
    std::vector<SparseOperator> g{sx, sy};
    SparseOperator g5;
    ExactScalar alpha;
    for (int cur = 2;; cur += 2) {
        SparseOperator prod = SparseOperator::identity(g.front().dim());
        for (const auto& x : g)
            prod = matmul(prod, x);
        // prod is diagonal with entries in {±1, ±i}; fix α so the first entry is +1.
        alpha = ExactScalar(1) / prod.at(0, 0);
        g5 = prod.scaled(alpha);
        if (cur == d)
            break;
        const SparseOperator one = SparseOperator::identity(g.front().dim());
        std::vector<SparseOperator> next;
        next.reserve(g.size() + 2);
        for (const auto& x : g)
            next.push_back(kron(sx, x));
        next.push_back(kron(sx, g5));
        next.push_back(kron(sy, one));
        g = std::move(next);
    }
    return GammaBasis{d, std::move(g), std::move(g5), std::move(alpha)};
}

int order(MultiIndex A) { return std::popcount(A); }

std::vector<int> indices(MultiIndex A)
{
    std::vector<int> out;
    for (int a = 1; A; ++a, A >>= 1u)
        if (A & 1u)
            out.push_back(a);
    return out;
}

MultiIndex full_index(int d) { return d >= 32 ? ~MultiIndex{0} : (MultiIndex{1} << d) - 1u; }

std::vector<MultiIndex> subsets_of_size(int d, int k)
{
    std::vector<MultiIndex> out;
    for (MultiIndex A = 0; A <= full_index(d); ++A)
        if (order(A) == k)
            out.push_back(A);
    return out;
}

int reversal_sign(int k) { return (k % 4 == 2 || k % 4 == 3) ? -1 : 1; }

SparseOperator antisym_product(const GammaBasis& basis, MultiIndex A)
{
    if (A & ~full_index(basis.d))
        throw std::out_of_range("antisym_product: index outside 1..d");
    SparseOperator out = SparseOperator::identity(basis.spinor_dim());
    for (int a : indices(A))
        out = matmul(out, basis.gamma(a));
    return out;
}

SparseOperator pair_sum(const GammaBasis& basis, int k)
{
    const std::size_t n = basis.spinor_dim();
    std::vector<SparseOperator> parts;
    for (MultiIndex A : subsets_of_size(basis.d, k)) {
        SparseOperator g = antisym_product(basis, A);
        parts.push_back(kron(g, g));
    }
    if (parts.empty())
        return SparseOperator::zero(n * n);
    std::vector<ExactScalar> ones(parts.size(), ExactScalar(1));
    std::vector<const SparseOperator*> ptrs;
    for (const auto& p : parts)
        ptrs.push_back(&p);
    return kernel::linear_combination(ones, ptrs);
}

GradedRep graded_rep(const GammaBasis& basis, int n)
{
    if (n != 2 && n != 3)
        throw std::invalid_argument("graded_rep: n must be 2 or 3");
    const SparseOperator one = SparseOperator::identity(basis.spinor_dim());
    GradedRep rep{basis, n, {}};
    for (int i = 1; i <= n; ++i) {
        std::vector<SparseOperator> ops;
        for (int a = 1; a <= basis.d; ++a) {
            SparseOperator op;
            for (int slot = 1; slot <= n; ++slot) {
                const SparseOperator& f = slot < i ? basis.gamma5 : (slot == i ? basis.gamma(a) : one);
                op = slot == 1 ? f : kron(op, f);
            }
            ops.push_back(std::move(op));
        }
        rep.copy_ops.push_back(std::move(ops));
    }
    return rep;
}

SparseOperator copy_product(const GradedRep& rep, int copy, MultiIndex A)
{
    if (copy < 1 || copy > rep.n)
        throw std::out_of_range("copy_product: copy index");
    SparseOperator out = SparseOperator::identity(rep.dim());
    for (int a : indices(A))
        out = matmul(out, rep.op(copy, a));
    return out;
}

std::vector<SparseOperator> exponential_terms(const GradedRep& rep, int i, int j)
{
    if (i == j)
        throw std::invalid_argument("as_exponential: copies must differ");
    if (i < 1 || j < 1 || i > rep.n || j > rep.n)
        throw std::out_of_range("as_exponential: copy index");
    const int d = rep.basis.d;
    std::vector<SparseOperator> terms;
    for (int k = 0; k <= d; ++k) {
        std::vector<SparseOperator> parts;
        for (MultiIndex A : subsets_of_size(d, k))
            parts.push_back(matmul(copy_product(rep, i, A), copy_product(rep, j, A)));
        std::vector<ExactScalar> ones(parts.size(), ExactScalar(1));
        std::vector<const SparseOperator*> ptrs;
        for (const auto& p : parts)
            ptrs.push_back(&p);
        terms.push_back(kernel::linear_combination(ones, ptrs));
    }
    return terms;
}

SparseOperator as_exponential(const std::vector<SparseOperator>& terms, const Rational& t)
{
    std::vector<ExactScalar> coeffs;
    std::vector<const SparseOperator*> ptrs;
    Rational tk = 1;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        coeffs.emplace_back(Rational(reversal_sign(static_cast<int>(k)) * tk));
        ptrs.push_back(&terms[k]);
        tk *= t;
    }
    return kernel::linear_combination(coeffs, ptrs);
}

kernel::DenseMatrix as_exponential(const std::vector<SparseOperator>& terms, double t)
{
    kernel::DenseMatrix out(terms.front().dim());
    double tk = 1.0;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        out = kernel::axpy(out, reversal_sign(static_cast<int>(k)) * tk, terms[k]);
        tk *= t;
    }
    return out;
}

SparseOperator as_exponential(const GradedRep& rep, int i, int j, const Rational& t)
{
    return as_exponential(exponential_terms(rep, i, j), t);
}

ExchangePair exchange_pair(const GradedRep& rep)
{
    auto terms = exponential_terms(rep, 1, 2);
    return {as_exponential(terms, Rational(-1)), as_exponential(terms, Rational(1))};
}

SparseOperator gamma5_pair_reflection(const GammaBasis& basis, int k)
{
    if (k < 0 || k > basis.d)
        throw std::out_of_range("gamma5_pair_reflection: k outside 0..d");
    const SparseOperator g55 = kron(basis.gamma5, basis.gamma5);
    const ExactScalar sign((basis.d / 2) % 2 == 0 ? 1 : -1);
    return matmul(g55, pair_sum(basis, k)) - pair_sum(basis, basis.d - k).scaled(sign);
}

}  // namespace ybv::clifford
