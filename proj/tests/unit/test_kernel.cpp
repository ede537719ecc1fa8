#include "oracle.hpp"

#include "ybv/kernel.hpp"

#include <doctest.h>

#include <random>

using namespace ybv::kernel;

namespace {

SparseOperator random_op(std::mt19937_64& rng, std::size_t n, int density_pct, bool complex_entries)
{
    std::uniform_int_distribution<int> pick(0, 99), num(-9, 9), den(1, 7);
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (pick(rng) < density_pct) {
                ExactScalar v(make_rational(num(rng), den(rng)), complex_entries ? make_rational(num(rng), den(rng)) : Rational(0));
                t.push_back({i, j, v});
            }
    return SparseOperator(n, std::move(t));
}

}  // namespace

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-2/7") == Rational(-2, 7));
    CHECK(parse_rational("+5") == Rational(5));
    CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK(to_string(make_rational(-4, 6)) == "-2/3");
    CHECK(to_double(Rational(1, 4)) == 0.25);
}

TEST_CASE("gaussian rational field")
{
    const ExactScalar a(Rational(1, 2), Rational(-3)), b(Rational(2), Rational(1, 3));
    const ExactScalar p = a * b;
    CHECK(p.re() == 2);
    CHECK(p.im() == Rational(1, 6) - 6);
    CHECK((p / b) == a);
    CHECK(ExactScalar::i() * ExactScalar::i() == ExactScalar(-1));
    CHECK(pow(ExactScalar::i(), 7) == -ExactScalar::i());
    CHECK(parse_scalar(to_string(a)) == a);
    CHECK(parse_scalar("-1/3*i") == ExactScalar(Rational(0), Rational(-1, 3)));
    CHECK_THROWS(ExactScalar(1) / ExactScalar(0));
}

TEST_CASE("sparse construction drops zeros and sums duplicates")
{
    SparseOperator m(3, {{0, 1, 2}, {0, 1, -2}, {2, 0, 1}, {2, 0, Rational(1, 2)}, {1, 1, 0}});
    CHECK(m.nnz() == 1);
    CHECK(m.at(2, 0) == ExactScalar(Rational(3, 2)));
    CHECK(m.at(0, 1).is_zero());
    CHECK(SparseOperator::identity(4).trace() == ExactScalar(4));
    CHECK(SparseOperator::zero(5).is_zero());
}

TEST_CASE("matmul and kron agree with dense products")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 6; ++trial) {
        const bool cx = trial % 2 == 1;
        const auto a = random_op(rng, 6, 40, cx), b = random_op(rng, 6, 40, cx);
        CHECK(matmul(a, b).to_dense() == oracle::mul(a.to_dense(), b.to_dense()));
        const auto c = random_op(rng, 3, 50, cx);
        CHECK(kron(a, c).to_dense() == oracle::kron(a.to_dense(), c.to_dense()));
        CHECK((a + b).to_dense() == oracle::add(a.to_dense(), b.to_dense()));
        CHECK(commutator(a, b).to_dense() ==
              oracle::add(oracle::mul(a.to_dense(), b.to_dense()), oracle::mul(b.to_dense(), a.to_dense()), -1));
    }
}

TEST_CASE("matmul survives integer overflow of the fast path")
{
    // Entries near 2^62 with coprime denominators overflow 128-bit accumulation.
    Rational big(mpz_class("4611686018427387847"), mpz_class("4611686018427387903"));
    big.canonicalize();
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            t.push_back({i, j, ExactScalar(big * make_rational(static_cast<long>(i + 1), static_cast<long>(j + 2)),
                                           big * Rational(static_cast<long>(j + 3)))});
    const SparseOperator a(4, t);
    CHECK(matmul(a, a).to_dense() == oracle::mul(a.to_dense(), a.to_dense()));
}

TEST_CASE("embed places an operator on one slot")
{
    std::mt19937_64 rng(11);
    const auto op = random_op(rng, 2, 60, true);
    const auto e = embed(op, 1, {2, 2, 2});
    CHECK(e.to_dense() == oracle::kron(oracle::kron(oracle::eye(2), op.to_dense()), oracle::eye(2)));
}

TEST_CASE("first_difference locates the first mismatch")
{
    const auto a = SparseOperator::identity(3);
    SparseOperator b(3, {{0, 0, 1}, {1, 1, 1}, {2, 2, 2}, {2, 1, 5}});
    const auto m = first_difference(a, b);
    REQUIRE(m);
    CHECK(m->row == 2);
    CHECK(m->col == 1);
    CHECK(m->count == 2);
    CHECK(m->rhs == ExactScalar(5));
    CHECK_FALSE(first_difference(a, SparseOperator::identity(3)));
}

TEST_CASE("adjoint and linear combination")
{
    const SparseOperator a(2, {{0, 1, ExactScalar(Rational(1), Rational(2))}});
    CHECK(a.adjoint().at(1, 0) == ExactScalar(Rational(1), Rational(-2)));
    const auto i2 = SparseOperator::identity(2);
    const auto lc = linear_combination({ExactScalar(2), ExactScalar(-1)}, {&i2, &a});
    CHECK(lc.at(0, 0) == ExactScalar(2));
    CHECK(lc.at(0, 1) == ExactScalar(Rational(-1), Rational(-2)));
}

TEST_CASE("dense float helpers")
{
    const SparseOperator a(2, {{0, 1, 1}, {1, 0, ExactScalar::i()}});
    const auto d = DenseMatrix::from_sparse(a);
    const auto sq = d * d;
    CHECK(sq(0, 0) == FloatScalar(0, 1));
    CHECK((sq - DenseMatrix::identity(2)).max_abs() == doctest::Approx(std::sqrt(2.0)));
    CHECK_THROWS_AS(checked(FloatScalar(std::numeric_limits<double>::infinity(), 0), "x"), std::domain_error);
}
