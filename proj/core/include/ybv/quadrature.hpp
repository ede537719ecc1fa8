#pragma once

#include "ybv/report.hpp"
#include "ybv/rmatrix.hpp"

#include <array>
#include <functional>
#include <stdexcept>
#include <string>

namespace ybv::quadrature {

class DivergentIntegral : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Substitution { Power, Tan };
enum class Accumulation { Pairwise, Sequential };

struct QuadratureSpec {
    double abs_tol = 1e-14;
    double rel_tol = 1e-12;
    int max_subdivisions = 4000;
    Substitution substitution = Substitution::Power;
    Accumulation accumulation = Accumulation::Pairwise;
};

struct QuadResult {
    double value = 0;
    double error = 0;
    int intervals = 0;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss–Kronrod 7/15 on [a, b]. Throws BudgetExhausted when the tolerance is not met.
QuadResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec = {});

// ∫₀^∞ f with f ~ x^{alpha−1} at 0 and f ~ x^{−beta−1} at ∞ (alpha, beta > 0).
// Power: split at 1, x = s^{1/alpha} on [0,1] and x = s^{−1/beta} on [1,∞). Tan: x = tan θ.
QuadResult integrate_half_line(const Integrand& f, double alpha, double beta, const QuadratureSpec& spec = {});

// 2∫₀^∞ x^{u−1+2j(+1)}/(1+x²)^{u+d/2} dx, the Beta weight of R_{2j} (even) or R_{2j+1} (odd).
double beta_coefficient_integral(int d, double u, int j, rmatrix::Parity parity, const QuadratureSpec& spec = {});

// ∫₀^∞ x^{u−1}/(1+x²)^{u+d/2}[(A+B)e_d(xy) + (A−B)e_d(−xy)] dx with e_d the exponential
// series truncated at degree d.
double reconstruct_Rfun(int d, double u, double y, double A = 1, double B = 1, const QuadratureSpec& spec = {});
// Σ_{k≤d} s_k R_k y^k/k! with R_k the beta-form values scaled by A (even) and B (odd).
double rfun_series(int d, double u, double y, double A = 1, double B = 1);

// ∫∫ x^{u−1}y^{−u−1}(x+y)^k(1−xy)^{d−k}/((1+x²)^{u+d/2}(1+y²)^{−u+d/2}), continued in the inner variable.
double unitarity_double_integral(int d, double u, int k, const QuadratureSpec& spec = {});
// −(2π/u)/sin πu at k = 0, −(2π/u)cot πu at k = d, 0 otherwise.
double unitarity_double_integral_expected(int d, double u, int k);

struct TripleIntegralParams {
    int d = 2;
    double u = 0.5, v = 0.5;
    double A = 0, B = 0, C = 0;
    std::array<int, 3> octant{1, 1, 1};
};

// I^{u,v}(A,B,C) over one octant, exponential series truncated at total degree d.
double triple_integral_I(const TripleIntegralParams& p, const QuadratureSpec& spec = {});

// Against the log-Γ Beta values, and parity ratios against the exact beta-form table.
CheckReport check_beta_integrals(int d, const kernel::Rational& u, double tol = 1e-8);
CheckReport check_rfun(int d, double u, double y, double tol = 1e-7);
CheckReport check_unitarity_integral(int d, double u, double rel_tol = 1e-4, double abs_tol = 1e-4);
CheckReport check_triple_symmetry(const TripleIntegralParams& p, double tol = 1e-3);

}  // namespace ybv::quadrature
