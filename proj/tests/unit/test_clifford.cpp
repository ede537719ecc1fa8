#include "oracle.hpp"

#include "ybv/clifford.hpp"

#include <doctest.h>

using namespace ybv;
using namespace ybv::clifford;
using kernel::ExactScalar;
using kernel::SparseOperator;

namespace {

std::vector<oracle::Mat> dense_gammas(const GammaBasis& b)
{
    std::vector<oracle::Mat> g;
    for (const auto& x : b.gammas)
        g.push_back(x.to_dense());
    return g;
}

}  // namespace

TEST_CASE("gamma matrices satisfy the Clifford relations")
{
    for (int d : {2, 4, 6, 8}) {
        CAPTURE(d);
        const auto b = build_gamma(d);
        const std::size_t n = std::size_t{1} << (d / 2);
        REQUIRE(b.spinor_dim() == n);
        const auto g = dense_gammas(b);
        for (int a = 0; a < d; ++a)
            for (int c = 0; c < d; ++c) {
                const auto ac = oracle::add(oracle::mul(g[a], g[c]), oracle::mul(g[c], g[a]));
                CHECK(ac == (a == c ? oracle::scale(oracle::eye(n), 2) : oracle::zeros(n)));
            }
        // γ_{d+1} = α γ_1⋯γ_d, diagonal with the +1 block first.
        oracle::Mat prod = oracle::eye(n);
        for (const auto& m : g)
            prod = oracle::mul(prod, m);
        CHECK(oracle::scale(prod, b.alpha) == b.gamma5.to_dense());
        for (std::size_t i = 0; i < n; ++i)
            CHECK(b.gamma5.at(i, i) == ExactScalar(i < n / 2 ? 1 : -1));
        CHECK(b.gamma5.nnz() == n);
        CHECK(pow(b.alpha, 2) == ExactScalar((d / 2) % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("chirality phase per dimension")
{
    CHECK(build_gamma(2).alpha == -ExactScalar::i());
    CHECK(build_gamma(4).alpha == ExactScalar(-1));
    CHECK(build_gamma(6).alpha == ExactScalar::i());
    CHECK(build_gamma(8).alpha == ExactScalar(1));
}

TEST_CASE("invalid dimensions are rejected")
{
    CHECK_THROWS_AS(build_gamma(3), std::invalid_argument);
    CHECK_THROWS_AS(build_gamma(0), std::invalid_argument);
    CHECK_THROWS_AS(build_gamma(10), std::invalid_argument);
}

TEST_CASE("subset bookkeeping")
{
    CHECK(order(0b1011) == 3);
    CHECK(indices(0b1010) == std::vector<int>{2, 4});
    CHECK(full_index(4) == 0b1111u);
    const long binom[] = {1, 6, 15, 20, 15, 6, 1};
    for (int k = 0; k <= 6; ++k)
        CHECK(subsets_of_size(6, k).size() == static_cast<std::size_t>(binom[k]));
    CHECK(reversal_sign(0) == 1);
    CHECK(reversal_sign(1) == 1);
    CHECK(reversal_sign(2) == -1);
    CHECK(reversal_sign(3) == -1);
    CHECK(reversal_sign(4) == 1);
    CHECK(reversal_sign(6) == -1);
}

TEST_CASE("ordered products equal the permutation-sum antisymmetrization")
{
    const auto b = build_gamma(4);
    const auto g = dense_gammas(b);
    for (MultiIndex A = 0; A < 16u; ++A) {
        CAPTURE(A);
        CHECK(antisym_product(b, A).to_dense() == oracle::antisym(g, indices(A)));
    }
}

TEST_CASE("pair sums match the ordered-tuple definition")
{
    for (int d : {2, 4}) {
        const auto b = build_gamma(d);
        const auto g = dense_gammas(b);
        for (int k = 0; k <= d; ++k) {
            CAPTURE(d);
            CAPTURE(k);
            CHECK(pair_sum(b, k).to_dense() == oracle::pair_sum(g, k));
        }
    }
}

TEST_CASE("gamma5 pair reflection vanishes")
{
    for (int d : {2, 4, 6})
        for (int k = 0; k <= d; ++k)
            CHECK(gamma5_pair_reflection(build_gamma(d), k).is_zero());
}

TEST_CASE("graded copies anticommute across copies")
{
    const auto rep = graded_rep(build_gamma(2), 3);
    CHECK(rep.dim() == 8);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int a = 1; a <= 2; ++a)
                for (int c = 1; c <= 2; ++c) {
                    const auto ac = kernel::anticommutator(rep.op(i, a), rep.op(j, c));
                    const bool same = i == j && a == c;
                    CHECK(ac == (same ? SparseOperator::identity(8).scaled(ExactScalar(2)) : SparseOperator::zero(8)));
                }
}

TEST_CASE("exponential generator is a polynomial in t")
{
    const auto rep = graded_rep(build_gamma(2), 2);
    const auto terms = exponential_terms(rep, 1, 2);
    REQUIRE(terms.size() == 3);
    CHECK(terms[0] == SparseOperator::identity(rep.dim()));
    const kernel::Rational t(2, 5);
    // E(t) = T_0 + t T_1 − t² T_2
    const auto expect = terms[0] + terms[1].scaled(ExactScalar(t)) - terms[2].scaled(ExactScalar(t * t));
    CHECK(as_exponential(rep, 1, 2, t) == expect);
    const auto dense = as_exponential(terms, 0.4);
    CHECK((dense - kernel::DenseMatrix::from_sparse(expect)).max_abs() < 1e-15);
}

TEST_CASE("exchange operators intertwine the copies")
{
    const auto rep = graded_rep(build_gamma(4), 2);
    const auto ex = exchange_pair(rep);
    for (int a = 1; a <= 4; ++a) {
        CHECK(rep.op(2, a) * ex.P == ex.P * rep.op(1, a));
        CHECK(rep.op(1, a) * ex.P_prime == ex.P_prime * rep.op(2, a));
    }
    CHECK(ex.P * ex.P_prime == SparseOperator::identity(rep.dim()).scaled(ExactScalar(16)));
}
