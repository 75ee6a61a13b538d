#include "logalg/cyclotomic.hpp"
#include "logalg/examples.hpp"
#include "logalg/lvalues.hpp"

#include <benchmark/benchmark.h>

using namespace logalg;

namespace {

void BM_L1Rapid(benchmark::State &state)
{
    const int terms = static_cast<int>(state.range(0));
    const NewformCoeffs f = eta_product_coeffs(11, terms + 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(L1_rapid(f, 11, 1, terms));
    }
}
BENCHMARK(BM_L1Rapid)->Arg(400)->Arg(4000);

void BM_L1Twisted(benchmark::State &state)
{
    const NewformCoeffs f = eta_product_coeffs(11, 2001);
    const DirichletCharacter psi = DirichletCharacter::parse("cubic:7");
    for (auto _ : state) {
        benchmark::DoNotOptimize(L1_twisted(f, 11, psi, 1, 2000));
    }
}
BENCHMARK(BM_L1Twisted)->Unit(benchmark::kMillisecond);

void BM_GaussSum(benchmark::State &state)
{
    const DirichletCharacter chi = DirichletCharacter::from_primitive_root(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauss_sum(chi));
    }
}
BENCHMARK(BM_GaussSum)->Arg(7)->Arg(31);

void BM_WpNumeric(benchmark::State &state)
{
    const CurveModel c = level11_curve();
    const PeriodLattice L = periods(c);
    const Real g2 = c.g2.get_d(), g3 = c.g3.get_d();
    Real s = 0.1L;
    for (auto _ : state) {
        s = s < 0.9L ? s + 0.01L : 0.1L;
        benchmark::DoNotOptimize(wp_numeric(Complex(s * L.Omega, 0.3L), L, g2, g3));
    }
}
BENCHMARK(BM_WpNumeric);

void BM_Example(benchmark::State &state)
{
    const char *which[] = {"one", "two", "three"};
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_example(which[state.range(0)]));
    }
}
BENCHMARK(BM_Example)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

} // namespace
