#include "ybv/relations.hpp"

#include <doctest.h>

#include <array>

using namespace ybv;
using namespace ybv::relations;

namespace {

const std::array<std::array<int, 3>, 8> kSigns = {{{1, 1, 1},
                                                    {1, 1, -1},
                                                    {1, -1, 1},
                                                    {1, -1, -1},
                                                    {-1, 1, 1},
                                                    {-1, 1, -1},
                                                    {-1, -1, 1},
                                                    {-1, -1, -1}}};

}  // namespace

TEST_CASE("report vocabulary")
{
    CHECK(to_string(Status::Pass) == "PASS");
    CHECK(to_string(Status::Fail) == "FAIL");
    CHECK(to_string(Status::Skipped) == "SKIPPED");
    CHECK(ybe_dimension(2) == 8);
    CHECK(ybe_dimension(8) == 4096);
}

TEST_CASE("clifford check")
{
    for (int d : {2, 4, 6}) {
        const auto r = check_clifford(d);
        CHECK(r.check_id == "clifford");
        CHECK(r.passed());
        CHECK(r.exact);
        CHECK_FALSE(r.max_residual);
    }
}

TEST_CASE("coefficient check over normalizations")
{
    for (auto n : {Normalization::Unit, Normalization::Product, Normalization::Beta})
        CHECK(check_coefficients(4, Rational(1, 2), n).passed());
    CHECK(check_coefficients(6, Rational(1), Normalization::D6Paper).passed());
}

TEST_CASE("Yang-Baxter passes for every normalization and rep")
{
    for (int d : {2, 4})
        for (auto n : {Normalization::Unit, Normalization::Product, Normalization::Beta})
            for (auto rep : {RepChoice::Naive, RepChoice::Primed, RepChoice::DoublePrimed}) {
                CAPTURE(d);
                CHECK(check_ybe(d, Rational(1, 2), Rational(1, 3), n, rep).passed());
            }
    CHECK(check_ybe(6, Rational(1, 2), Rational(1, 3), Normalization::D6Paper, RepChoice::Primed).passed());
}

TEST_CASE("budget skips oversized checks")
{
    const auto r = check_ybe(8, Rational(1, 2), Rational(1, 3), Normalization::Product, RepChoice::Primed);
    CHECK(r.status == Status::Skipped);
    CHECK(r.detail);
    CheckOptions tight;
    tight.budget_dim = 64;
    CHECK(check_ybe(4, Rational(1, 2), Rational(1, 3), Normalization::Product, RepChoice::Primed, tight).status ==
          Status::Skipped);
    tight.budget_dim = 65;
    CHECK(check_ybe(4, Rational(1, 2), Rational(1, 3), Normalization::Product, RepChoice::Primed, tight).passed());
}

TEST_CASE("single-coefficient perturbations break Yang-Baxter")
{
    for (int k = 0; k <= 4; ++k) {
        CheckOptions o;
        o.perturb_k = k;
        const auto r = check_ybe(4, Rational(1, 2), Rational(1, 3), Normalization::Product, RepChoice::Primed, o);
        CAPTURE(k);
        CHECK(r.status == Status::Fail);
        REQUIRE(r.detail);
        CHECK(r.detail->find("first mismatch at") != std::string::npos);
    }
}

TEST_CASE("d=2 odd rescaling leaves Yang-Baxter intact")
{
    CheckOptions o;
    o.perturb_k = 1;
    CHECK(check_ybe(2, Rational(1, 2), Rational(1, 3), Normalization::Product, RepChoice::Primed, o).passed());
    o.perturb_k = 0;
    CHECK(check_ybe(2, Rational(1, 2), Rational(1, 3), Normalization::Product, RepChoice::Primed, o).status ==
          Status::Fail);
}

TEST_CASE("three-term relations imply Yang-Baxter")
{
    // Meta-property: all eight parity relations passing under a setting means the full equation passes too.
    for (auto rep : {RepChoice::Naive, RepChoice::Primed}) {
        bool all = true;
        for (const auto& s : kSigns)
            all = all && check_three_term(4, Rational(2), Rational(-1, 5), s, Normalization::Product, rep).passed();
        CHECK(all);
        CHECK(check_ybe(4, Rational(2), Rational(-1, 5), Normalization::Product, rep).passed());
    }
}

TEST_CASE("three-term relations fail under a perturbed coefficient")
{
    CheckOptions o;
    o.perturb_k = 2;
    bool any_fail = false;
    for (const auto& s : kSigns)
        any_fail = any_fail ||
                   check_three_term(4, Rational(1, 2), Rational(1, 3), s, Normalization::Product, RepChoice::Primed, o)
                           .status == Status::Fail;
    CHECK(any_fail);
}

TEST_CASE("RLL relations")
{
    for (int d : {2, 4})
        CHECK(check_rll_fundamental(d, Rational(1), Rational(1, 2)).passed());
    CHECK(check_rll_quantum(4, Rational(1), Rational(1, 2), rmatrix::so_defining_rep(4)).passed());
    CHECK(check_rll_quantum(4, Rational(1), Rational(1, 2), rmatrix::so_spinor_rep(clifford::build_gamma(4))).passed());
}

TEST_CASE("asym condition by representation")
{
    CHECK(check_asym(rmatrix::so_defining_rep(4)).passed());
    CHECK(check_asym(rmatrix::so_defining_rep(6)).passed());
    CHECK(check_asym(rmatrix::so_spinor_rep(clifford::build_gamma(4))).status == Status::Fail);
}

TEST_CASE("unitarity")
{
    for (int d : {2, 4, 6})
        for (const Rational& u : {Rational(1, 3), Rational(1, 2), Rational(2)})
            for (auto rep : {RepChoice::Naive, RepChoice::Primed}) {
                CAPTURE(d);
                CHECK(check_unitarity(d, u, Normalization::Product, rep).passed());
                CHECK(unitarity_binomial(d, u, Normalization::Product) == unitarity_product(d, u, Normalization::Product));
            }
    // d=2, product form: h+ = −u², h− = 1.
    const Rational u(1, 3);
    const auto h = unitarity_binomial(2, u, Normalization::Product);
    CHECK(h.first == -u * u);
    CHECK(h.second == 1);
    const auto h2 = unitarity_product(2, Rational(2), Normalization::Product);
    CHECK(h2.first == -4);
    CHECK(h2.second == 1);
}

TEST_CASE("symmetries, reduction and exchange identities")
{
    for (int d : {2, 4})
        for (auto rep : {RepChoice::Naive, RepChoice::Primed})
            CHECK(check_symmetries(d, Rational(1, 2), Normalization::Product, rep).passed());
    CHECK(check_d6_reduction(Rational(1)).passed());
    CHECK(check_d6_reduction(Rational(-2, 3)).passed());
    CHECK(check_exchange_identities(2).passed());
    CHECK(check_exchange_identities(4).passed());
}

TEST_CASE("generating function product law")
{
    for (int d : {2, 4})
        CHECK(check_unit_gen(d, Rational(1, 3), Rational(2, 7)).passed());
}

TEST_CASE("fundamental YBE and the projector limit")
{
    for (int d : {2, 4, 6})
        CHECK(check_fundamental_ybe(d, Rational(1, 2), Rational(1, 3)).passed());
    for (int d : {2, 4, 6})
        CHECK(check_epsilon_projector_limit(d).passed());
}
