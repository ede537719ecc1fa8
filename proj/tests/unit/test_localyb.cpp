#include "ybv/localyb.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace ybv;
using namespace ybv::localyb;

namespace {

Rational R(long p, long q = 1) { return kernel::make_rational(p, q); }

// Richardson-extrapolated central differences of the forward map, independent of the library's stencil.
double fd_det(const Triple& p)
{
    auto col = [&](int axis) {
        auto at = [&](double h) {
            Triple a = p, b = p;
            double* ca = axis == 0 ? &a.x : axis == 1 ? &a.y : &a.z;
            double* cb = axis == 0 ? &b.x : axis == 1 ? &b.y : &b.z;
            *ca += h;
            *cb -= h;
            const Curve fa = forward_map(a), fb = forward_map(b);
            return std::array<double, 3>{(fa.a - fb.a) / (2 * h), (fa.b - fb.b) / (2 * h), (fa.t - fb.t) / (2 * h)};
        };
        const double h = 1e-4 * std::max(1e-6, std::abs(axis == 0 ? p.x : axis == 1 ? p.y : p.z));
        const auto d1 = at(h), d2 = at(h / 2);
        return std::array<double, 3>{(4 * d2[0] - d1[0]) / 3, (4 * d2[1] - d1[1]) / 3, (4 * d2[2] - d1[2]) / 3};
    };
    const auto c0 = col(0), c1 = col(1), c2 = col(2);
    return c0[0] * (c1[1] * c2[2] - c1[2] * c2[1]) - c1[0] * (c0[1] * c2[2] - c0[2] * c2[1]) +
           c2[0] * (c0[1] * c1[2] - c0[2] * c1[1]);
}

}  // namespace

TEST_CASE("forward map frozen values")
{
    const auto c = forward_map(TripleQ{R(2), R(1), R(1)});
    CHECK(c.a == -9);
    CHECK(c.b == -1);
    CHECK(c.t == R(1, 3));
    CHECK(jacobian(TripleQ{R(2), R(1), R(1)}) == R(-20, 3));
    const auto f = forward_map(Triple{3, 1, 2});
    CHECK(f.a == doctest::Approx(-4));
    CHECK(f.b == doctest::Approx(-2));
    CHECK(f.t == doctest::Approx(0.5));
    CHECK(jacobian(Triple{3, 1, 2}) == doctest::Approx(-1.25));
}

TEST_CASE("invariants are a chart expression")
{
    const TripleQ p{R(1, 3), R(-2, 5), R(7, 4)};
    const auto c = forward_map(p);
    const auto [l1, l2] = invariants(p);
    CHECK(l1 == c.b);
    CHECK(l2 == c.a * c.b);
}

TEST_CASE("companion point is an involution on the chart")
{
    const CurveQ c{R(-9), R(-1), R(1, 3)};
    CHECK(companion_point(c).t == R(1, 3));
    const CurveQ d{R(5, 2), R(3), R(2, 7)};
    const auto dd = companion_point(companion_point(d));
    CHECK(dd.a == d.a);
    CHECK(dd.b == d.b);
    CHECK(dd.t == d.t);
}

TEST_CASE("exact primed solve")
{
    const auto fixed = solve_primed_exact(TripleQ{R(2), R(1), R(1)});
    REQUIRE(fixed);
    CHECK(fixed->x == 2);
    CHECK(fixed->y == 1);
    CHECK(fixed->z == 1);
    CHECK_FALSE(solve_primed_exact(TripleQ{R(3), R(1), R(2)}));
    const auto back = inverse_map_exact(forward_map(TripleQ{R(2), R(1), R(1)}), 1, 1);
    REQUIRE(back);
    CHECK(back->x == 2);
    CHECK(back->y == 1);
    CHECK(back->z == 1);
}

TEST_CASE("all 32 cells are distinct and classified consistently")
{
    SamplingConfig cfg;
    cfg.points_per_region = 20;
    std::set<int> seen;
    for (int i = 0; i < kRegionCount; ++i) {
        const auto tag = DomainTag::from_index(i);
        CHECK(tag.index() == i);
        seen.insert(tag.index());
        for (const auto& p : sample_region(tag, cfg)) {
            CAPTURE(tag.to_string());
            REQUIRE(classify_region(p) == tag);
            const auto c = forward_map(p);
            const auto s = tag.curve_signs();
            CHECK((c.a > 0 ? 1 : -1) == s[0]);
            CHECK((c.b > 0 ? 1 : -1) == s[1]);
            CHECK((c.t > 0 ? 1 : -1) == s[2]);
            CHECK((std::abs(c.a) > 1) == tag.same_quadrant());
            const auto back = inverse_map(c, tag);
            CHECK(relative_distance(back, p) < 1e-12);
        }
    }
    CHECK(seen.size() == 32);
    CHECK_THROWS_AS(classify_region(Triple{1, 1, 1}), std::domain_error);
    CHECK_THROWS_AS(classify_region(Triple{2, 0.5, 1}), std::domain_error);
    CHECK_THROWS_AS(classify_region(Triple{0, 0.5, 1}), std::domain_error);
}

TEST_CASE("sampling is deterministic in the seed")
{
    SamplingConfig cfg;
    const auto tag = DomainTag::from_index(13);
    const auto a = sample_point(tag, 4, cfg), b = sample_point(tag, 4, cfg);
    CHECK(a.x == b.x);
    CHECK(a.y == b.y);
    CHECK(a.z == b.z);
    cfg.seed += 1;
    const auto c = sample_point(tag, 4, cfg);
    CHECK((c.x != a.x || c.y != a.y || c.z != a.z));
    const auto narrow = integrand_sampling();
    CHECK(narrow.lo == doctest::Approx(0.2));
    CHECK(narrow.hi == doctest::Approx(5.0));
}

TEST_CASE("primed point satisfies the system and keeps the invariants")
{
    SamplingConfig cfg;
    cfg.points_per_region = 5;
    for (int i = 0; i < kRegionCount; ++i)
        for (const auto& p : sample_region(DomainTag::from_index(i), cfg)) {
            const auto q = solve_primed(p);
            for (double r : sys_residuals(p, q))
                CHECK(r < 1e-10);
            const auto [l1, l2] = invariants(p);
            const auto [m1, m2] = invariants(q);
            CHECK(std::abs(l1 - m1) <= 1e-10 * std::max(1.0, std::abs(l1)));
            CHECK(std::abs(l2 - m2) <= 1e-10 * std::max(1.0, std::abs(l2)));
            CHECK(relative_distance(solve_primed(q), p) < 1e-9);
        }
}

TEST_CASE("Jacobian against independent finite differences")
{
    SamplingConfig cfg;
    cfg.points_per_region = 3;
    for (int i = 0; i < kRegionCount; ++i)
        for (const auto& p : sample_region(DomainTag::from_index(i), cfg)) {
            const double j = jacobian(p);
            CHECK(std::abs(fd_det(p) - j) <= 1e-5 * std::abs(j));
            CHECK(std::abs(jacobian_finite_difference(p) - j) <= 1e-6 * std::abs(j));
        }
}

TEST_CASE("matrix local Yang-Baxter at one point")
{
    const auto basis = clifford::build_gamma(2);
    const LocalYbe loc(basis);
    const Triple p{3, 1, 2};
    const auto q = solve_primed(p);
    CHECK(loc.residual(p, q) < 1e-9);
    Triple wrong = q;
    wrong.z *= 1.01;
    CHECK(loc.residual(p, wrong) > 1e-4);
    CHECK(check_local_ybe(basis, p).passed());
}

TEST_CASE("integrand symmetry and its negative control")
{
    const IntegrandParams q{2, 0.5, 1.0 / 3, 1, 2, 3};
    const Triple p{0.7, 0.3, 1.2};
    CHECK(exponent_swap_residual(1, 2, 3, p) < 1e-12);
    CHECK(integrand_symmetry_residual(q, p) < 1e-10);
    // Swapping A and B instead of A and C is not a symmetry.
    const auto primed = solve_primed(p);
    const double n1 = exponent_form(p, 1, 2, 3), n2 = exponent_form(primed, 2, 1, 3);
    CHECK(std::abs(n1 - n2) > 1e-3);
}

TEST_CASE("suite checks")
{
    SamplingConfig cfg;
    cfg.points_per_region = 10;
    CHECK(check_local_geometry(cfg).passed());
    CHECK(check_local_ybe_suite(2, cfg).passed());
    const auto r = check_integrand_symmetry(IntegrandParams{4, 0.5, 1.0 / 3, 1, 2, 3}, integrand_sampling(cfg));
    CHECK(r.passed());
    CHECK_FALSE(r.exact);
    REQUIRE(r.max_residual);
    CHECK(*r.max_residual < 1e-8);
}
