#include "ybv/quadrature.hpp"

#include "ybv/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <sstream>
#include <vector>

namespace ybv::quadrature {

namespace {

constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
};

Panel gk15(const Integrand& f, double a, double b)
{
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const double fc = f(c);
    double kron = fc * kWgk[7], gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double s = f(c - dx) + f(c + dx);
        kron += kWgk[j] * s;
        if (j % 2 == 1)
            gauss += kWg[j / 2] * s;
    }
    kron *= h;
    gauss *= h;
    if (!std::isfinite(kron))
        throw DivergentIntegral("integrand is not finite on [" + std::to_string(a) + ", " + std::to_string(b) + "]");
    return {a, b, kron, std::abs(kron - gauss)};
}

double pairwise_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi)
{
    if (hi - lo <= 8) {
        double s = 0;
        for (std::size_t i = lo; i < hi; ++i)
            s += v[i];
        return s;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

double accumulate(std::vector<Panel> panels, Accumulation mode, double Panel::*field)
{
    std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    std::vector<double> v;
    v.reserve(panels.size());
    for (const auto& p : panels)
        v.push_back(p.*field);
    if (mode == Accumulation::Sequential) {
        double s = 0;
        for (double x : v)
            s += x;
        return s;
    }
    return pairwise_sum(v, 0, v.size());
}

std::string sci(double v)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

std::string fixed(double v)
{
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec)
{
    if (!(spec.abs_tol > 0) || !(spec.rel_tol > 0) || spec.max_subdivisions < 1)
        throw std::invalid_argument("quadrature tolerances must be positive and the budget finite");
    auto worse = [](const Panel& x, const Panel& y) { return x.error < y.error; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> heap(worse);
    Panel first = gk15(f, a, b);
    double value = first.value, error = first.error;
    heap.push(first);
    int splits = 0;
    while (error > std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) {
        if (splits >= spec.max_subdivisions)
            throw BudgetExhausted("quadrature budget exhausted: error " + sci(error) + " after " +
                                  std::to_string(splits) + " subdivisions");
        const Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = gk15(f, worst.a, mid), right = gk15(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++splits;
    }
    std::vector<Panel> panels;
    panels.reserve(heap.size());
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    QuadResult r;
    r.intervals = static_cast<int>(panels.size());
    r.error = accumulate(panels, spec.accumulation, &Panel::error);
    r.value = accumulate(std::move(panels), spec.accumulation, &Panel::value);
    return r;
}

namespace {

// ∫₀¹ f with f ~ x^{alpha−1} at 0.
QuadResult from_zero(const Integrand& f, double alpha, const QuadratureSpec& spec)
{
    const double g = std::min(alpha, 1.0);
    if (g == 1.0)
        return integrate(f, 0.0, 1.0, spec);
    const double e = 1 / g;
    return integrate([&](double s) { return f(std::pow(s, e)) * e * std::pow(s, e - 1); }, 0.0, 1.0, spec);
}

// ∫₁^∞ f with f ~ x^{−beta−1} at ∞.
QuadResult to_infinity(const Integrand& f, double beta, const QuadratureSpec& spec)
{
    const double g = std::min(beta, 1.0), e = 1 / g;
    return integrate([&](double s) { return f(std::pow(s, -e)) * e * std::pow(s, -e - 1); }, 0.0, 1.0, spec);
}

}  // namespace

QuadResult integrate_half_line(const Integrand& f, double alpha, double beta, const QuadratureSpec& spec)
{
    if (!(alpha > 0) || !(beta > 0))
        throw DivergentIntegral("half-line integral diverges: alpha=" + std::to_string(alpha) +
                                " beta=" + std::to_string(beta));
    if (spec.substitution == Substitution::Tan) {
        return integrate(
            [&](double th) {
                const double c = std::cos(th);
                return f(std::tan(th)) / (c * c);
            },
            0.0, std::numbers::pi / 2, spec);
    }
    const QuadResult lo = from_zero(f, alpha, spec), hi = to_infinity(f, beta, spec);
    return {lo.value + hi.value, lo.error + hi.error, lo.intervals + hi.intervals};
}

double beta_coefficient_integral(int d, double u, int j, rmatrix::Parity parity, const QuadratureSpec& spec)
{
    if (parity == rmatrix::Parity::Full)
        throw std::invalid_argument("parity must be even or odd");
    if (!(u > 0))
        throw DivergentIntegral("beta integral needs u > 0");
    const int power = 2 * j + (parity == rmatrix::Parity::Odd ? 1 : 0);
    const double e = u - 1 + power, p = u + d / 2.0;
    const double alpha = e + 1, beta = 2 * p - e - 1;
    if (j < 0 || !(alpha > 0) || !(beta > 0))
        throw DivergentIntegral("beta integral diverges for d=" + std::to_string(d) + " j=" + std::to_string(j));
    auto f = [&](double x) { return 2 * std::exp(e * std::log(x) - p * std::log1p(x * x)); };
    return integrate_half_line(f, alpha, beta, spec).value;
}

namespace {

double truncated_exp(double z, int d)
{
    double term = 1, sum = 1;
    for (int n = 1; n <= d; ++n) {
        term *= z / n;
        sum += term;
    }
    return sum;
}

}  // namespace

double reconstruct_Rfun(int d, double u, double y, double A, double B, const QuadratureSpec& spec)
{
    if (!(u > 0))
        throw DivergentIntegral("R-function integral needs u > 0");
    const double p = u + d / 2.0;
    auto f = [&](double x) {
        const double w = std::exp((u - 1) * std::log(x) - p * std::log1p(x * x));
        return w * ((A + B) * truncated_exp(x * y, d) + (A - B) * truncated_exp(-x * y, d));
    };
    return integrate_half_line(f, u, u, spec).value;
}

double rfun_series(int d, double u, double y, double A, double B)
{
    const auto values = rmatrix::beta_form_values(d, u);
    double sum = 0, power = 1, fact = 1;
    for (int k = 0; k <= d; ++k) {
        if (k > 0) {
            power *= y;
            fact *= k;
        }
        sum += clifford::reversal_sign(k) * values[static_cast<std::size_t>(k)] * (k % 2 == 0 ? A : B) * power / fact;
    }
    return sum;
}

double unitarity_double_integral(int d, double u, int k, const QuadratureSpec& spec)
{
    if (!(u > 0 && u < 1))
        throw DivergentIntegral("unitarity integral is evaluated for 0 < u < 1");
    if (k < 0 || k > d)
        throw std::invalid_argument("k outside 0..d");
    const double hd = d / 2.0;
    QuadratureSpec inner_spec = spec;
    inner_spec.rel_tol = std::max(spec.rel_tol, 1e-11);
    inner_spec.abs_tol = std::max(spec.abs_tol, 1e-14);
    auto inner = [&](double x) {
        const double h0 = std::pow(x, k), cinf = std::pow(-x, d - k);
        auto h = [&](double y) { return std::pow(x + y, k) * std::pow(1 - x * y, d - k) * std::pow(1 + y * y, u - hd); };
        // y^{−u−1}(h − h0) on (0, 1]
        auto near = [&](double y) {
            double diff;
            if (1 - x * y > 0) {
                double L = (d - k) * std::log1p(-x * y) + (u - hd) * std::log1p(y * y);
                if (k > 0)
                    L += k * std::log1p(y / x);
                diff = h0 * std::expm1(L);
            } else {
                diff = h(y) - h0;
            }
            return std::pow(y, -u - 1) * diff;
        };
        // y^{−u−1}h − c∞ y^{u−1} on [1, ∞)
        auto far = [&](double y) {
            double diff;
            if (x * y > 1) {
                double L = (u - hd) * std::log1p(1 / (y * y));
                if (k > 0)
                    L += k * std::log1p(x / y);
                if (d - k > 0)
                    L += (d - k) * std::log1p(-1 / (x * y));
                diff = cinf * std::expm1(L);
            } else {
                diff = h(y) * std::pow(y, -2 * u) - cinf;
            }
            return std::pow(y, u - 1) * diff;
        };
        const double a = from_zero(near, 1 - u, inner_spec).value;
        const double b = to_infinity(far, 1 - u, inner_spec).value;
        return a - h0 / u + b - cinf / u;
    };
    auto outer = [&](double x) { return std::exp((u - 1) * std::log(x) - (u + hd) * std::log1p(x * x)) * inner(x); };
    QuadratureSpec outer_spec = spec;
    outer_spec.rel_tol = std::max(spec.rel_tol, 1e-10);
    outer_spec.abs_tol = std::max(spec.abs_tol, 1e-12);
    return integrate_half_line(outer, u, u, outer_spec).value;
}

double unitarity_double_integral_expected(int d, double u, int k)
{
    const double pi = std::numbers::pi;
    if (k == 0)
        return -(2 * pi / u) / std::sin(pi * u);
    if (k == d)
        return -(2 * pi / u) * std::cos(pi * u) / std::sin(pi * u);
    return 0.0;
}

double triple_integral_I(const TripleIntegralParams& q, const QuadratureSpec& spec)
{
    if (!(q.u > 0) || !(q.v > 0))
        throw DivergentIntegral("triple integral needs u, v > 0");
    for (int s : q.octant)
        if (s != 1 && s != -1)
            throw std::invalid_argument("octant signs must be +1 or -1");
    const int d = q.d;
    const double hd = d / 2.0;
    std::vector<double> inv_fact(static_cast<std::size_t>(d) + 1, 1.0);
    for (int n = 1; n <= d; ++n)
        inv_fact[static_cast<std::size_t>(n)] = inv_fact[static_cast<std::size_t>(n) - 1] / n;
    QuadratureSpec sx = spec, sy = spec, sz = spec;
    sx.rel_tol = std::max(spec.rel_tol, 1e-6);
    sy.rel_tol = std::max(spec.rel_tol, 1e-7);
    sz.rel_tol = std::max(spec.rel_tol, 1e-8);
    sx.abs_tol = sy.abs_tol = sz.abs_tol = std::max(spec.abs_tol, 1e-13);
    auto weight = [](double r, double e, double p) { return std::exp((e - 1) * std::log(r) - p * std::log1p(r * r)); };
    auto in_x = [&](double ax) {
        const double x = q.octant[0] * ax;
        auto in_y = [&](double ay) {
            const double y = q.octant[1] * ay, w = 1 - x * y;
            auto in_z = [&](double az) {
                const double z = q.octant[2] * az;
                const double N = q.A * (x + y) + q.B * z * (y - x) + q.C * z * (1 + x * y);
                // Σ_n N^n w^{d−n}/n!, Horner in N/w would divide by w
                double series = 0, Nn = 1;
                for (int n = 0; n <= d; ++n) {
                    series += Nn * std::pow(w, d - n) * inv_fact[static_cast<std::size_t>(n)];
                    Nn *= N;
                }
                return weight(az, q.u + q.v, q.u + q.v + hd) * series;
            };
            return weight(ay, q.v, q.v + hd) * integrate_half_line(in_z, q.u + q.v, q.u + q.v, sz).value;
        };
        return weight(ax, q.u, q.u + hd) * integrate_half_line(in_y, q.v, q.v, sy).value;
    };
    return integrate_half_line(in_x, q.u, q.u, sx).value;
}

namespace {

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

}  // namespace

CheckReport check_beta_integrals(int d, const kernel::Rational& uq, double tol)
{
    Stopwatch sw;
    const double u = kernel::to_double(uq);
    const auto expected = rmatrix::beta_form_values(d, u);
    const auto exact = rmatrix::coefficients_closed_form(d, uq, rmatrix::Normalization::Beta);
    std::vector<double> got;
    double worst = 0;
    std::string where;
    auto offer = [&](double e, std::string at) {
        if (e > worst) {
            worst = e;
            where = std::move(at);
        }
    };
    for (int k = 0; k <= d; ++k) {
        const int j = k / 2;
        const auto parity = k % 2 == 0 ? rmatrix::Parity::Even : rmatrix::Parity::Odd;
        const double sign = j % 2 == 0 ? 1.0 : -1.0;
        got.push_back(sign * beta_coefficient_integral(d, u, j, parity));
        const double want = expected[static_cast<std::size_t>(k)];
        offer(rel_err(got.back(), want), "k=" + std::to_string(k) + ": " + fixed(got.back()) + " vs " + fixed(want));
    }
    // R_k/R_{k mod 2} is rational in u.
    for (int k = 2; k <= d; ++k) {
        const double ratio = got[static_cast<std::size_t>(k)] / got[static_cast<std::size_t>(k % 2)];
        const double want = kernel::to_double(exact[k].re());
        offer(rel_err(ratio, want), "ratio k=" + std::to_string(k) + ": " + fixed(ratio) + " vs " + fixed(want));
    }
    return float_report("beta_integral", {{"d", std::to_string(d)}, {"u", kernel::to_string(uq)}, {"tol", sci(tol)}},
                        worst < tol, worst, "max rel error " + sci(worst) + (where.empty() ? "" : "; worst " + where),
                        sw);
}

CheckReport check_rfun(int d, double u, double y, double tol)
{
    Stopwatch sw;
    double worst = 0;
    std::ostringstream detail;
    for (auto [A, B] : {std::pair{1.0, 1.0}, std::pair{0.7, -0.3}}) {
        const double got = reconstruct_Rfun(d, u, y, A, B), want = rfun_series(d, u, y, A, B);
        const double e = std::abs(got - want) / std::max(std::abs(want), 1e-300);
        worst = std::max(worst, e);
        detail << "(A,B)=(" << A << "," << B << "): " << fixed(got) << " vs " << fixed(want) << "; ";
    }
    std::ostringstream us, ys;
    us << u;
    ys << y;
    return float_report("rfun_integral", {{"d", std::to_string(d)}, {"u", us.str()}, {"y", ys.str()}, {"tol", sci(tol)}},
                        worst < tol, worst, detail.str() + "max rel error " + sci(worst), sw);
}

CheckReport check_unitarity_integral(int d, double u, double rel_tol, double abs_tol)
{
    Stopwatch sw;
    bool ok = true;
    double worst = 0;
    std::ostringstream detail;
    for (int k = 0; k <= d; ++k) {
        const double got = unitarity_double_integral(d, u, k), want = unitarity_double_integral_expected(d, u, k);
        const bool relative = std::abs(want) > 1e-12;
        const double e = relative ? rel_err(got, want) : std::abs(got - want);
        ok = ok && e < (relative ? rel_tol : abs_tol);
        worst = std::max(worst, e);
        detail << "k=" << k << ":" << fixed(got) << (k < d ? " " : "");
    }
    std::ostringstream us;
    us << u;
    return float_report("unitarity_integral", {{"d", std::to_string(d)}, {"u", us.str()}}, ok, worst,
                        detail.str() + "; max error " + sci(worst), sw);
}

CheckReport check_triple_symmetry(const TripleIntegralParams& p, double tol)
{
    Stopwatch sw;
    TripleIntegralParams swapped = p;
    std::swap(swapped.A, swapped.C);
    const double lhs = triple_integral_I(p), rhs = triple_integral_I(swapped);
    const double e = std::abs(lhs - rhs) / std::abs(lhs);
    auto str = [](double v) {
        std::ostringstream os;
        os << v;
        return os.str();
    };
    auto sgn = [](int s) { return s > 0 ? '+' : '-'; };
    return float_report("triple_integral",
                        {{"d", std::to_string(p.d)}, {"u", str(p.u)}, {"v", str(p.v)}, {"A", str(p.A)},
                         {"B", str(p.B)}, {"C", str(p.C)},
                         {"octant", std::string{sgn(p.octant[0]), sgn(p.octant[1]), sgn(p.octant[2])}},
                         {"tol", sci(tol)}},
                        e < tol, e, "I(A,B,C)=" + fixed(lhs) + " I(C,B,A)=" + fixed(rhs), sw);
}

}  // namespace ybv::quadrature
