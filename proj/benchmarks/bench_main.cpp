#include "ybv/clifford.hpp"
#include "ybv/kernel.hpp"
#include "ybv/localyb.hpp"
#include "ybv/quadrature.hpp"
#include "ybv/relations.hpp"
#include "ybv/rmatrix.hpp"

#include <benchmark/benchmark.h>

using namespace ybv;
using kernel::Rational;

namespace {

kernel::SparseOperator spinor_R(int d, const Rational& u)
{
    const auto b = clifford::build_gamma(d);
    return rmatrix::assemble_spinor_R(b, rmatrix::coefficients(d, u, rmatrix::Normalization::Product),
                                      rmatrix::RepChoice::Primed);
}

void BM_coefficients(benchmark::State& state)
{
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(rmatrix::coefficients(d, Rational(1, 3), rmatrix::Normalization::Product));
}
BENCHMARK(BM_coefficients)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_assemble(benchmark::State& state)
{
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(spinor_R(d, Rational(1, 3)));
}
BENCHMARK(BM_assemble)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_kron(benchmark::State& state)
{
    const int d = static_cast<int>(state.range(0));
    const auto r = spinor_R(d, Rational(1, 2));
    const auto one = kernel::SparseOperator::identity(clifford::build_gamma(d).spinor_dim());
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel::kron(r, one));
}
BENCHMARK(BM_kron)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_matmul(benchmark::State& state)
{
    const int d = static_cast<int>(state.range(0));
    const auto one = kernel::SparseOperator::identity(clifford::build_gamma(d).spinor_dim());
    const auto a = kernel::kron(spinor_R(d, Rational(1, 2)), one);
    const auto b = kernel::kron(one, spinor_R(d, Rational(5, 6)));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel::matmul(a, b));
}
BENCHMARK(BM_matmul)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_ybe(benchmark::State& state)
{
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(relations::check_ybe(d, Rational(1, 2), Rational(1, 3),
                                                      rmatrix::Normalization::Product, rmatrix::RepChoice::Primed));
}
BENCHMARK(BM_ybe)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_jacobian(benchmark::State& state)
{
    const localyb::Triple p{3, 1, 2};
    for (auto _ : state)
        benchmark::DoNotOptimize(localyb::jacobian(p));
}
BENCHMARK(BM_jacobian);

void BM_unitarity_integral(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(quadrature::unitarity_double_integral(2, 1.0 / 3, 0));
}
BENCHMARK(BM_unitarity_integral)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
