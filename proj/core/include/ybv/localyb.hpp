#pragma once

#include "ybv/clifford.hpp"
#include "ybv/report.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace ybv::localyb {

using kernel::Rational;

struct Triple {
    double x = 0, y = 0, z = 0;
};

struct TripleQ {
    Rational x, y, z;
};

// (a, b, t) chart on the curves C_{a,b}.
struct Curve {
    double a = 0, b = 0, t = 0;
};

struct CurveQ {
    Rational a, b, t;
};

// a = ((1+xy)/(1−xy))((x+y)/(x−y)), b = z(x−y)/(1−xy), t = (x−y)/(1+xy)
Curve forward_map(const Triple& p);
CurveQ forward_map(const TripleQ& p);

// λ1 = z(x−y)/(1−xy), λ2 = z(x+y)(1+xy)/(1−xy)²
std::pair<double, double> invariants(const Triple& p);
std::pair<Rational, Rational> invariants(const TripleQ& p);

// t → b/(a t)
Curve companion_point(const Curve& c);
CurveQ companion_point(const CurveQ& c);

// One of the 32 open cells cut out by the coordinate planes, |x| = |y| and |xy| = 1.
struct DomainTag {
    int sx = 1, sy = 1, sz = 1;
    bool x_dominates = true;  // |x| > |y|
    bool hyperbolic = false;  // |xy| > 1

    int index() const;
    static DomainTag from_index(int i);
    std::string to_string() const;
    bool same_quadrant() const { return sx == sy; }

    // Signs of (a, b, t) on this cell.
    std::array<int, 3> curve_signs() const;

    friend bool operator==(const DomainTag&, const DomainTag&) = default;
};

inline constexpr int kRegionCount = 32;

// Throws std::domain_error on a cell boundary.
DomainTag classify_region(const Triple& p);
DomainTag classify_region(const TripleQ& p);

// Solves for s = xy; the two roots are s and 1/s and correspond to (x, y) and (−1/x, −1/y).
// The root in quadrant (sx, sy) is returned. Throws std::domain_error without a real solution.
Triple inverse_map(const Curve& c, int sx, int sy);
// Validates c against the sign and |a| pattern of the tag and the result against the tag.
Triple inverse_map(const Curve& c, const DomainTag& region);
// Exact when the discriminant is a rational square, nullopt otherwise.
std::optional<TripleQ> inverse_map_exact(const CurveQ& c, int sx, int sy);

// (x′, y′, z′) through the (a, b, t′) chart in the quadrant of p.
Triple solve_primed(const Triple& p);
std::optional<TripleQ> solve_primed_exact(const TripleQ& p);

// Relative residuals of the three equalities linking (x, y, z) and (x′, y′, z′).
std::array<double, 3> sys_residuals(const Triple& p, const Triple& primed);

// Signed determinant ∂(a,b,t)/∂(x,y,z) = 2(1+x²)(1+y²)/((1+xy)(1−xy)³).
double jacobian(const Triple& p);
Rational jacobian(const TripleQ& p);
// Five-point central differences of forward_map, step h relative to each coordinate.
double jacobian_finite_difference(const Triple& p, double h = 1e-4);

// Relative distance in the max norm, scaled by max(1, |a|, |b|).
double relative_distance(const Triple& a, const Triple& b);

// (1−xy)^{−d}E12(y)E23(z)E12(x) and (1−x′y′)^{−d}E23(x′)E12(z′)E23(y′) on three graded copies.
class LocalYbe {
public:
    explicit LocalYbe(const clifford::GammaBasis& basis);
    int d() const { return d_; }
    // max |lhs − rhs| / max |lhs|.
    double residual(const Triple& p, const Triple& primed) const;

private:
    int d_;
    std::vector<kernel::SparseOperator> t12_, t23_;
};

struct IntegrandParams {
    int d = 2;
    double u = 0.5, v = 0.5;
    double A = 0, B = 0, C = 0;
};

// A(x+y)/(1−xy) + B z(y−x)/(1−xy) + C z(1+xy)/(1−xy)
double exponent_form(const Triple& p, double A, double B, double C);
// The integrand of I^{u,v}(A,B,C) at p.
double integrand(const IntegrandParams& q, const Triple& p);
// |∂(x′,y′,z′)/∂(x,y,z)| = |J(p)|/|J(p′)|·|t′/t|
double primed_volume_factor(const Triple& p, const Triple& primed);
// |F(p;A,B,C) − F(p′;C,B,A)·factor| / |F(p;A,B,C)|
double integrand_symmetry_residual(const IntegrandParams& q, const Triple& p);
// |N(p;A,B,C) − N(p′;C,B,A)| / max(1, |N|)
double exponent_swap_residual(double A, double B, double C, const Triple& p);

struct SamplingConfig {
    int points_per_region = 100;
    std::uint64_t seed = 20240601;
    double margin = 0.05;  // relative distance from cell walls
    double lo = 0.05, hi = 20.0;
};

// Deterministic: point i of region r depends only on (seed, r, i).
Triple sample_point(const DomainTag& region, int i, const SamplingConfig& cfg);
std::vector<Triple> sample_region(const DomainTag& region, const SamplingConfig& cfg);

// Single-point matrix relation, PASS iff residual < tol.
CheckReport check_local_ybe(const clifford::GammaBasis& basis, const Triple& p, double tol = 1e-9);
// Matrix relation over all regions.
CheckReport check_local_ybe_suite(int d, const SamplingConfig& cfg, double tol = 1e-9);
// Scalar geometry over all regions: system, invariants, round trip, involution, Jacobian.
CheckReport check_local_geometry(const SamplingConfig& cfg, double tol = 1e-10);
// Coordinates in [1/5, 5]: exponent magnitudes stay below ~10³ there.
SamplingConfig integrand_sampling(SamplingConfig cfg = {});
// Integrand symmetry and the exponent swap over all regions.
CheckReport check_integrand_symmetry(const IntegrandParams& q, const SamplingConfig& cfg, double tol = 1e-8);

}  // namespace ybv::localyb
