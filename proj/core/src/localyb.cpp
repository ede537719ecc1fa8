#include "ybv/localyb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ybv::localyb {

using kernel::DenseMatrix;

namespace {

int sign_of(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
int sign_of(const Rational& v) { return sgn(v); }

void require_nonzero(double v, const char* what)
{
    if (v == 0.0 || !std::isfinite(v))
        throw std::domain_error(std::string("singular denominator: ") + what);
}

void require_nonzero(const Rational& v, const char* what)
{
    if (sgn(v) == 0)
        throw std::domain_error(std::string("singular denominator: ") + what);
}

template <class T, class P>
auto forward_impl(const P& p)
{
    const T s = p.x * p.y, dm = p.x - p.y;
    const T one_minus = 1 - s, one_plus = 1 + s;
    require_nonzero(one_minus, "1 - xy");
    require_nonzero(one_plus, "1 + xy");
    require_nonzero(dm, "x - y");
    const T a = (one_plus / one_minus) * ((p.x + p.y) / dm);
    const T b = p.z * dm / one_minus;
    const T t = dm / one_plus;
    return std::array<T, 3>{a, b, t};
}

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string fmt(const Triple& p) { return "(" + fmt(p.x) + "," + fmt(p.y) + "," + fmt(p.z) + ")"; }

std::string sci(double v)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

double rel(double lhs, double rhs) { return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)}); }

std::uint64_t splitmix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Largest value seen together with where it was seen.
struct Worst {
    double value = 0;
    std::string where;
    void offer(double v, const std::string& at)
    {
        if (!(v <= value)) {  // NaN wins
            value = v;
            where = at;
        }
    }
};

}  // namespace

Curve forward_map(const Triple& p)
{
    const auto v = forward_impl<double>(p);
    return {v[0], v[1], v[2]};
}

CurveQ forward_map(const TripleQ& p)
{
    const auto v = forward_impl<Rational>(p);
    return {v[0], v[1], v[2]};
}

std::pair<double, double> invariants(const Triple& p)
{
    const double w = 1 - p.x * p.y;
    require_nonzero(w, "1 - xy");
    return {p.z * (p.x - p.y) / w, p.z * (p.x + p.y) * (1 + p.x * p.y) / (w * w)};
}

std::pair<Rational, Rational> invariants(const TripleQ& p)
{
    const Rational w = 1 - p.x * p.y;
    require_nonzero(w, "1 - xy");
    return {p.z * (p.x - p.y) / w, p.z * (p.x + p.y) * (1 + p.x * p.y) / (w * w)};
}

Curve companion_point(const Curve& c)
{
    require_nonzero(c.a * c.t, "a t");
    return {c.a, c.b, c.b / (c.a * c.t)};
}

CurveQ companion_point(const CurveQ& c)
{
    require_nonzero(c.a * c.t, "a t");
    return {c.a, c.b, c.b / (c.a * c.t)};
}

int DomainTag::index() const
{
    return (sx > 0) | (sy > 0) << 1 | (sz > 0) << 2 | int(x_dominates) << 3 | int(hyperbolic) << 4;
}

DomainTag DomainTag::from_index(int i)
{
    if (i < 0 || i >= kRegionCount)
        throw std::out_of_range("region index");
    return {i & 1 ? 1 : -1, i & 2 ? 1 : -1, i & 4 ? 1 : -1, (i & 8) != 0, (i & 16) != 0};
}

std::string DomainTag::to_string() const
{
    auto c = [](int s) { return s > 0 ? '+' : '-'; };
    std::string out{c(sx), c(sy), c(sz)};
    out += x_dominates ? ",|x|>|y|" : ",|x|<|y|";
    out += hyperbolic ? ",|xy|>1" : ",|xy|<1";
    return out;
}

std::array<int, 3> DomainTag::curve_signs() const
{
    const bool same = sx == sy;
    const int s_one_plus = (!same && hyperbolic) ? -1 : 1;
    const int s_one_minus = (same && hyperbolic) ? -1 : 1;
    const int s_sum = x_dominates ? sx : sy;
    const int s_diff = x_dominates ? sx : -sy;
    return {s_one_plus * s_one_minus * s_sum * s_diff, sz * s_diff * s_one_minus, s_diff * s_one_plus};
}

namespace {

template <class T, class P>
DomainTag classify_impl(const P& p)
{
    using std::abs;
    const T ax = abs(p.x), ay = abs(p.y), axy = ax * ay;
    if (sign_of(p.x) == 0 || sign_of(p.y) == 0 || sign_of(p.z) == 0 || ax == ay || axy == 1)
        throw std::domain_error("point lies on a region boundary");
    return {sign_of(p.x), sign_of(p.y), sign_of(p.z), ax > ay, axy > 1};
}

}  // namespace

DomainTag classify_region(const Triple& p) { return classify_impl<double>(p); }
DomainTag classify_region(const TripleQ& p) { return classify_impl<Rational>(p); }

namespace {

template <class T>
std::array<T, 3> point_from_root(const T& a, const T& b, const T& t, const T& s)
{
    const T p = t * (1 + s), q = a * t * (1 - s);
    require_nonzero(p, "t(1+s)");
    return {(q + p) / 2, (q - p) / 2, b * (1 - s) / p};
}

}  // namespace

// (a²−1)t²s² − (2(a²+1)t²+4)s + (a²−1)t² = 0 with discriminant 16(a²t²+1)(t²+1) > 0.
Triple inverse_map(const Curve& c, int sx, int sy)
{
    const double a2 = c.a * c.a, t2 = c.t * c.t;
    const double A = (a2 - 1) * t2;
    if (A == 0.0 || !std::isfinite(A))
        throw std::domain_error("no regular solution: (a^2-1)t^2 = 0");
    const double minus_b = 2 * (a2 + 1) * t2 + 4;  // positive
    const double q = minus_b + 4 * std::sqrt((a2 * t2 + 1) * (t2 + 1));
    const double roots[2] = {q / (2 * A), 2 * A / q};
    for (double s : roots) {
        const auto v = point_from_root<double>(c.a, c.b, c.t, s);
        if (sign_of(v[0]) == sx && sign_of(v[1]) == sy)
            return {v[0], v[1], v[2]};
    }
    throw std::domain_error("no solution in the requested quadrant");
}

Triple inverse_map(const Curve& c, const DomainTag& region)
{
    const auto want = region.curve_signs();
    if (sign_of(c.a) != want[0] || sign_of(c.b) != want[1] || sign_of(c.t) != want[2])
        throw std::domain_error("sign pattern of (a,b,t) does not match region " + region.to_string());
    const double abs_a = std::abs(c.a);
    if (region.same_quadrant() ? !(abs_a > 1) : !(abs_a < 1))
        throw std::domain_error("|a| is outside the image of region " + region.to_string());
    const Triple p = inverse_map(c, region.sx, region.sy);
    if (!(classify_region(p) == region))
        throw std::domain_error("inverse image leaves region " + region.to_string());
    return p;
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& q)
{
    if (sgn(q) < 0)
        return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
        return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    return Rational(n, d);
}

}  // namespace

std::optional<TripleQ> inverse_map_exact(const CurveQ& c, int sx, int sy)
{
    const Rational a2 = c.a * c.a, t2 = c.t * c.t;
    const Rational A = (a2 - 1) * t2;
    if (sgn(A) == 0)
        throw std::domain_error("no regular solution: (a^2-1)t^2 = 0");
    const auto root = rational_sqrt((a2 * t2 + 1) * (t2 + 1));
    if (!root)
        return std::nullopt;
    const Rational q = 2 * (a2 + 1) * t2 + 4 + 4 * *root;
    const Rational roots[2] = {q / (2 * A), 2 * A / q};
    for (const Rational& s : roots) {
        const auto v = point_from_root<Rational>(c.a, c.b, c.t, s);
        if (sgn(v[0]) == sx && sgn(v[1]) == sy)
            return TripleQ{v[0], v[1], v[2]};
    }
    throw std::domain_error("no solution in the requested quadrant");
}

Triple solve_primed(const Triple& p)
{
    return inverse_map(companion_point(forward_map(p)), sign_of(p.x), sign_of(p.y));
}

std::optional<TripleQ> solve_primed_exact(const TripleQ& p)
{
    return inverse_map_exact(companion_point(forward_map(p)), sgn(p.x), sgn(p.y));
}

std::array<double, 3> sys_residuals(const Triple& p, const Triple& q)
{
    const double w = 1 - p.x * p.y, wq = 1 - q.x * q.y;
    return {rel((p.x + p.y) / w, q.z * (1 + q.x * q.y) / wq), rel(p.z * (1 + p.x * p.y) / w, (q.x + q.y) / wq),
            rel(p.z * (p.x - p.y) / w, q.z * (q.x - q.y) / wq)};
}

double jacobian(const Triple& p)
{
    const double s = p.x * p.y, w = 1 - s;
    require_nonzero(1 + s, "1 + xy");
    require_nonzero(w, "1 - xy");
    return 2 * (1 + p.x * p.x) * (1 + p.y * p.y) / ((1 + s) * w * w * w);
}

Rational jacobian(const TripleQ& p)
{
    const Rational s = p.x * p.y, w = 1 - s;
    require_nonzero(1 + s, "1 + xy");
    require_nonzero(w, "1 - xy");
    return 2 * (1 + p.x * p.x) * (1 + p.y * p.y) / ((1 + s) * w * w * w);
}

double jacobian_finite_difference(const Triple& p, double h)
{
    double m[3][3];
    const double base[3] = {p.x, p.y, p.z};
    for (int j = 0; j < 3; ++j) {
        const double step = h * std::max(std::abs(base[j]), 1e-3);
        auto at = [&](double k) {
            double v[3] = {p.x, p.y, p.z};
            v[j] += k * step;
            return forward_map(Triple{v[0], v[1], v[2]});
        };
        // five-point stencil
        const Curve f2 = at(2), f1 = at(1), b1 = at(-1), b2 = at(-2);
        auto diff = [&](double Curve::*c) {
            return (-(f2.*c) + 8 * (f1.*c) - 8 * (b1.*c) + (b2.*c)) / (12 * step);
        };
        m[0][j] = diff(&Curve::a);
        m[1][j] = diff(&Curve::b);
        m[2][j] = diff(&Curve::t);
    }
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double relative_distance(const Triple& a, const Triple& b)
{
    return std::max({rel(a.x, b.x), rel(a.y, b.y), rel(a.z, b.z)});
}

LocalYbe::LocalYbe(const clifford::GammaBasis& basis) : d_(basis.d)
{
    const auto rep = clifford::graded_rep(basis, 3);
    t12_ = clifford::exponential_terms(rep, 1, 2);
    t23_ = clifford::exponential_terms(rep, 2, 3);
}

double LocalYbe::residual(const Triple& p, const Triple& q) const
{
    DenseMatrix lhs = clifford::as_exponential(t12_, p.y) *
                      (clifford::as_exponential(t23_, p.z) * clifford::as_exponential(t12_, p.x));
    DenseMatrix rhs = clifford::as_exponential(t23_, q.x) *
                      (clifford::as_exponential(t12_, q.z) * clifford::as_exponential(t23_, q.y));
    lhs *= std::pow(1 - p.x * p.y, -d_);
    rhs *= std::pow(1 - q.x * q.y, -d_);
    if (!lhs.all_finite() || !rhs.all_finite())
        return std::numeric_limits<double>::infinity();
    return (lhs - rhs).max_abs() / lhs.max_abs();
}

double exponent_form(const Triple& p, double A, double B, double C)
{
    const double w = 1 - p.x * p.y;
    require_nonzero(w, "1 - xy");
    return (A * (p.x + p.y) + B * p.z * (p.y - p.x) + C * p.z * (1 + p.x * p.y)) / w;
}

namespace {

double log_integrand(const IntegrandParams& q, const Triple& p)
{
    const double hd = q.d / 2.0;
    return (q.u - 1) * std::log(std::abs(p.x)) + (q.v - 1) * std::log(std::abs(p.y)) +
           (q.u + q.v - 1) * std::log(std::abs(p.z)) + q.d * std::log(std::abs(1 - p.x * p.y)) -
           (q.u + hd) * std::log1p(p.x * p.x) - (q.v + hd) * std::log1p(p.y * p.y) -
           (q.u + q.v + hd) * std::log1p(p.z * p.z) + exponent_form(p, q.A, q.B, q.C);
}

}  // namespace

double integrand(const IntegrandParams& q, const Triple& p) { return std::exp(log_integrand(q, p)); }

double primed_volume_factor(const Triple& p, const Triple& primed)
{
    const double t = forward_map(p).t, tp = forward_map(primed).t;
    return std::abs(jacobian(p)) / std::abs(jacobian(primed)) * std::abs(tp / t);
}

double integrand_symmetry_residual(const IntegrandParams& q, const Triple& p)
{
    const Triple pp = solve_primed(p);
    IntegrandParams swapped = q;
    std::swap(swapped.A, swapped.C);
    // Compared in log space so large exponents do not overflow.
    const double lhs = log_integrand(q, p);
    const double rhs = log_integrand(swapped, pp) + std::log(primed_volume_factor(p, pp));
    return std::abs(std::expm1(rhs - lhs));
}

double exponent_swap_residual(double A, double B, double C, const Triple& p)
{
    const double lhs = exponent_form(p, A, B, C), rhs = exponent_form(solve_primed(p), C, B, A);
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

Triple sample_point(const DomainTag& region, int i, const SamplingConfig& cfg)
{
    std::uint64_t s = splitmix(cfg.seed);
    s = splitmix(s ^ static_cast<std::uint64_t>(region.index()));
    s = splitmix(s ^ static_cast<std::uint64_t>(i));
    std::mt19937_64 gen(s);
    std::uniform_real_distribution<double> logu(std::log(cfg.lo), std::log(cfg.hi));
    for (int attempt = 0; attempt < 100000; ++attempt) {
        double ax = std::exp(logu(gen)), ay = std::exp(logu(gen));
        const double az = std::exp(logu(gen));
        if ((ax > ay) != region.x_dominates)
            std::swap(ax, ay);
        if ((ax * ay > 1) != region.hyperbolic) {
            const double nx = 1 / ay, ny = 1 / ax;
            ax = nx;
            ay = ny;
        }
        if (std::abs(ax - ay) < cfg.margin * std::max(ax, ay))
            continue;
        if (std::abs(ax * ay - 1) < cfg.margin * std::max(1.0, ax * ay))
            continue;
        const Triple p{region.sx * ax, region.sy * ay, region.sz * az};
        if (classify_region(p) == region)
            return p;
    }
    throw std::runtime_error("sampling failed for region " + region.to_string());
}

std::vector<Triple> sample_region(const DomainTag& region, const SamplingConfig& cfg)
{
    std::vector<Triple> out;
    out.reserve(static_cast<std::size_t>(cfg.points_per_region));
    for (int i = 0; i < cfg.points_per_region; ++i)
        out.push_back(sample_point(region, i, cfg));
    return out;
}

namespace {

std::map<std::string, std::string> sampling_params(const SamplingConfig& cfg, double tol)
{
    return {{"points", std::to_string(cfg.points_per_region)}, {"seed", std::to_string(cfg.seed)}, {"tol", sci(tol)}};
}

CheckReport float_report(std::string id, std::map<std::string, std::string> params, bool ok, double residual,
                         std::string detail, const Stopwatch& sw)
{
    CheckReport r;
    r.check_id = std::move(id);
    r.params = std::move(params);
    r.status = ok ? Status::Pass : Status::Fail;
    r.exact = false;
    r.max_residual = residual;
    r.detail = std::move(detail);
    r.elapsed_ms = sw.elapsed_ms();
    return r;
}

// Runs f on every sampled point; an exception at a point is a failure located at that point.
template <class F>
std::optional<std::string> for_each_point(const SamplingConfig& cfg, F&& f)
{
    for (int r = 0; r < kRegionCount; ++r) {
        const DomainTag tag = DomainTag::from_index(r);
        for (int i = 0; i < cfg.points_per_region; ++i) {
            const Triple p = sample_point(tag, i, cfg);
            try {
                f(tag, p);
            } catch (const std::domain_error& e) {
                return std::string(e.what()) + " at " + fmt(p) + " in " + tag.to_string();
            }
        }
    }
    return std::nullopt;
}

}  // namespace

CheckReport check_local_ybe(const clifford::GammaBasis& basis, const Triple& p, double tol)
{
    Stopwatch sw;
    auto params = std::map<std::string, std::string>{
        {"d", std::to_string(basis.d)}, {"x", fmt(p.x)}, {"y", fmt(p.y)}, {"z", fmt(p.z)}, {"tol", sci(tol)}};
    const Triple q = solve_primed(p);
    const double res = LocalYbe(basis).residual(p, q);
    return float_report("local_ybe_point", std::move(params), res < tol, res,
                        "primed=" + fmt(q) + "; residual=" + sci(res), sw);
}

CheckReport check_local_ybe_suite(int d, const SamplingConfig& cfg, double tol)
{
    Stopwatch sw;
    auto params = sampling_params(cfg, tol);
    params["d"] = std::to_string(d);
    const LocalYbe engine(clifford::build_gamma(d));
    Worst worst;
    auto err = for_each_point(cfg, [&](const DomainTag& tag, const Triple& p) {
        worst.offer(engine.residual(p, solve_primed(p)), fmt(p) + " in " + tag.to_string());
    });
    if (err)
        return float_report("local_ybe", std::move(params), false, worst.value, *err, sw);
    const std::size_t n = static_cast<std::size_t>(cfg.points_per_region) * kRegionCount;
    return float_report("local_ybe", std::move(params), worst.value < tol, worst.value,
                        std::to_string(n) + " points in 32 regions; worst " + sci(worst.value) + " at " + worst.where,
                        sw);
}

CheckReport check_local_geometry(const SamplingConfig& cfg, double tol)
{
    Stopwatch sw;
    constexpr double kRoundTripTol = 1e-12, kInvolutionTol = 1e-9, kJacobianTol = 1e-6;
    Worst sys, lambda, round_trip, involution, jac;
    auto err = for_each_point(cfg, [&](const DomainTag& tag, const Triple& p) {
        const std::string at = fmt(p) + " in " + tag.to_string();
        const Triple q = solve_primed(p);
        for (double r : sys_residuals(p, q))
            sys.offer(r, at);
        const auto [l1, l2] = invariants(p);
        const auto [m1, m2] = invariants(q);
        lambda.offer(std::max(rel(l1, m1), rel(l2, m2)), at);
        round_trip.offer(relative_distance(inverse_map(forward_map(p), tag), p), at);
        involution.offer(relative_distance(solve_primed(q), p), at);
        const double j = jacobian(p);
        jac.offer(std::abs(jacobian_finite_difference(p) - j) / std::abs(j), at);
    });
    std::ostringstream detail;
    detail << "sys=" << sci(sys.value) << " lambda=" << sci(lambda.value) << " round_trip=" << sci(round_trip.value)
           << " involution=" << sci(involution.value) << " jacobian_fd=" << sci(jac.value);
    const double scalar = std::max(sys.value, lambda.value);
    if (err)
        return float_report("local_geometry", sampling_params(cfg, tol), false, scalar, *err, sw);
    bool ok = true;
    auto gate = [&](const Worst& w, double limit, const char* name) {
        if (!(w.value < limit)) {
            if (ok)
                detail << "; " << name << " exceeds " << sci(limit) << " at " << w.where;
            ok = false;
        }
    };
    gate(sys, tol, "sys");
    gate(lambda, tol, "lambda");
    gate(round_trip, kRoundTripTol, "round_trip");
    gate(involution, kInvolutionTol, "involution");
    gate(jac, kJacobianTol, "jacobian_fd");
    return float_report("local_geometry", sampling_params(cfg, tol), ok, scalar, detail.str(), sw);
}

SamplingConfig integrand_sampling(SamplingConfig cfg)
{
    cfg.lo = 0.2;
    cfg.hi = 5.0;
    return cfg;
}

CheckReport check_integrand_symmetry(const IntegrandParams& q, const SamplingConfig& cfg, double tol)
{
    Stopwatch sw;
    constexpr double kSwapTol = 1e-10;
    auto params = sampling_params(cfg, tol);
    params["d"] = std::to_string(q.d);
    params["u"] = fmt(q.u);
    params["v"] = fmt(q.v);
    params["A"] = fmt(q.A);
    params["B"] = fmt(q.B);
    params["C"] = fmt(q.C);
    Worst measure, swap;
    auto err = for_each_point(cfg, [&](const DomainTag& tag, const Triple& p) {
        const std::string at = fmt(p) + " in " + tag.to_string();
        measure.offer(integrand_symmetry_residual(q, p), at);
        swap.offer(exponent_swap_residual(q.A, q.B, q.C, p), at);
    });
    if (err)
        return float_report("integrand_symmetry", std::move(params), false, measure.value, *err, sw);
    std::string detail = "integrand=" + sci(measure.value) + " exponent_swap=" + sci(swap.value);
    bool ok = measure.value < tol && swap.value < kSwapTol;
    if (!(measure.value < tol))
        detail += "; integrand worst at " + measure.where;
    else if (!(swap.value < kSwapTol))
        detail += "; exponent swap worst at " + swap.where;
    return float_report("integrand_symmetry", std::move(params), ok, measure.value, detail, sw);
}

}  // namespace ybv::localyb
