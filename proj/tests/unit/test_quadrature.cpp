#include "ybv/quadrature.hpp"

#include <doctest.h>

#include <cmath>

using namespace ybv;
using namespace ybv::quadrature;

namespace {

const double kPi = std::acos(-1.0);

double rel(double a, double b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("finite intervals")
{
    CHECK(integrate([](double x) { return std::sin(x); }, 0, kPi).value == doctest::Approx(2).epsilon(1e-13));
    CHECK(integrate([](double x) { return std::exp(x); }, -1, 2).value ==
          doctest::Approx(std::exp(2) - std::exp(-1)).epsilon(1e-13));
    const auto r = integrate([](double x) { return 1 / std::sqrt(x); }, 0, 1);
    CHECK(r.value == doctest::Approx(2).epsilon(1e-10));
    CHECK(r.intervals > 1);
}

TEST_CASE("subdivision budget")
{
    QuadratureSpec tight;
    tight.max_subdivisions = 3;
    CHECK_THROWS_AS(integrate([](double x) { return std::sin(1 / (x + 1e-3)); }, 0, 1, tight), BudgetExhausted);
}

TEST_CASE("half line, both substitutions")
{
    const auto f = [](double x) { return 1 / (1 + x * x); };
    CHECK(rel(integrate_half_line(f, 1, 1).value, kPi / 2) < 1e-13);
    QuadratureSpec tan;
    tan.substitution = Substitution::Tan;
    CHECK(rel(integrate_half_line(f, 1, 1, tan).value, kPi / 2) < 1e-13);
    const auto g = [](double x) { return 1 / ((1 + x * x) * (1 + x * x)); };
    CHECK(rel(integrate_half_line(g, 1, 3, tan).value, kPi / 4) < 1e-12);
    // Endpoint power singularity x^{−1/2}/(1+x).
    const auto h = [](double x) { return 1 / (std::sqrt(x) * (1 + x)); };
    CHECK(rel(integrate_half_line(h, 0.5, 0.5).value, kPi) < 1e-11);
}

TEST_CASE("pairwise and sequential accumulation agree")
{
    const auto f = [](double x) { return std::pow(x, -0.7) / (1 + x * x * x); };
    QuadratureSpec seq;
    seq.accumulation = Accumulation::Sequential;
    const double a = integrate_half_line(f, 0.3, 2.3).value, b = integrate_half_line(f, 0.3, 2.3, seq).value;
    CHECK(rel(a, b) < 1e-13);
}

TEST_CASE("beta weights against std::beta")
{
    for (int d : {2, 4, 6})
        for (double u : {0.5, 1.0, 1.0 / 3, 2.5}) {
            for (int j = 0; 2 * j < d; ++j) {
                CAPTURE(d);
                CAPTURE(u);
                CAPTURE(j);
                const double even = std::beta(j + u / 2, (u + d) / 2 - j);
                CHECK(rel(beta_coefficient_integral(d, u, j, rmatrix::Parity::Even), even) < 1e-10);
                const double odd = std::beta(j + (u + 1) / 2, (u + d - 1) / 2 - j);
                if (2 * j + 1 < d)
                    CHECK(rel(beta_coefficient_integral(d, u, j, rmatrix::Parity::Odd), odd) < 1e-10);
            }
        }
    CHECK(rel(beta_coefficient_integral(2, 1, 0, rmatrix::Parity::Even), kPi / 2) < 1e-12);
}

TEST_CASE("boundary weight diverges")
{
    CHECK_THROWS_AS(beta_coefficient_integral(2, 2, 2, rmatrix::Parity::Even), DivergentIntegral);
    CHECK_THROWS_AS(beta_coefficient_integral(2, -1, 0, rmatrix::Parity::Even), DivergentIntegral);
}

TEST_CASE("R-function integral against an independent series")
{
    for (int d : {2, 4, 6})
        for (double y : {0.5, -1.3})
            for (auto [A, B] : {std::pair{1.0, 1.0}, std::pair{0.7, -0.3}}) {
                const double u = 0.6;
                double series = 0;
                for (int n = 0; n <= d; ++n) {
                    const double w = n % 2 == 0 ? A * std::beta(n / 2 + u / 2, (u + d) / 2 - n / 2)
                                                : B * std::beta((n - 1) / 2 + (u + 1) / 2, (u + d - 1) / 2 - (n - 1) / 2);
                    series += w * std::pow(y, n) / factorial(n);
                }
                CAPTURE(d);
                CAPTURE(y);
                CHECK(rel(reconstruct_Rfun(d, u, y, A, B), series) < 1e-10);
                CHECK(rel(rfun_series(d, u, y, A, B), series) < 1e-12);
            }
}

TEST_CASE("unitarity double integral")
{
    for (int d : {2, 4})
        for (double u : {1.0 / 3, 0.5, 0.7}) {
            CAPTURE(d);
            CAPTURE(u);
            CHECK(rel(unitarity_double_integral(d, u, 0), -(2 * kPi / u) / std::sin(kPi * u)) < 1e-8);
            const double kd = -(2 * kPi / u) / std::tan(kPi * u);
            CHECK(std::abs(unitarity_double_integral(d, u, d) - kd) < 1e-8 * std::max(1.0, std::abs(kd)));
            for (int k = 1; k < d; ++k)
                CHECK(std::abs(unitarity_double_integral(d, u, k)) < 1e-8);
        }
    CHECK(unitarity_double_integral_expected(2, 1.0 / 3, 2) == doctest::Approx(-10.8828).epsilon(1e-5));
}

TEST_CASE("triple integral symmetry has a nontrivial negative control")
{
    TripleIntegralParams p;
    p.d = 2;
    p.u = 0.5;
    p.v = 1.0 / 3;
    p.A = 0.3;
    p.B = 0.1;
    p.C = 0.7;
    const double base = triple_integral_I(p);
    TripleIntegralParams swapped = p;
    std::swap(swapped.A, swapped.C);
    CHECK(rel(triple_integral_I(swapped), base) < 1e-6);
    TripleIntegralParams wrong = p;
    std::swap(wrong.A, wrong.B);
    CHECK(rel(triple_integral_I(wrong), base) > 1e-2);
    CHECK(check_triple_symmetry(p).passed());
}

TEST_CASE("quadrature checks")
{
    CHECK(check_beta_integrals(4, kernel::Rational(1, 2)).passed());
    CHECK(check_rfun(4, 0.5, 0.5).passed());
    CHECK(check_unitarity_integral(2, 1.0 / 3).passed());
}
