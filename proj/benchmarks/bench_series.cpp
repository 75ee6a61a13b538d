#include "logalg/curve.hpp"
#include "logalg/identities.hpp"
#include "logalg/modform.hpp"

#include <benchmark/benchmark.h>

using namespace logalg;

namespace {

const CurveModel &curve11()
{
    static const CurveModel c = derive_invariants({0, -1, 1, -10, -20}, 11);
    return c;
}

QSeries dense(int prec)
{
    std::vector<Rational> c;
    for (int n = 1; n < prec; ++n) {
        c.push_back(make_rational(n % 7 - 3, 1 + n % 5));
    }
    c[0] = 1;
    return QSeries(1, std::move(c), prec);
}

void BM_Multiply(benchmark::State &state)
{
    const int prec = static_cast<int>(state.range(0));
    const QSeries a = dense(prec), b = dense(prec);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_Multiply)->Arg(30)->Arg(100)->Arg(300);

void BM_Reverse(benchmark::State &state)
{
    const QSeries a = dense(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reverse(a));
    }
}
BENCHMARK(BM_Reverse)->Arg(30)->Arg(60);

void BM_LogExp(benchmark::State &state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(formal_log_exp(curve11(), static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_LogExp)->Arg(30)->Arg(60);

void BM_ModularXY(benchmark::State &state)
{
    const int prec = static_cast<int>(state.range(0));
    const NewformCoeffs f = eta_product_coeffs(11, prec + 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(modular_xy(f, curve11(), prec));
    }
}
BENCHMARK(BM_ModularXY)->Arg(30)->Arg(100);

void BM_Honda(benchmark::State &state)
{
    const int deg = static_cast<int>(state.range(0));
    const NewformCoeffs f = eta_product_coeffs(11, deg + 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(honda_group_law(f, deg + 1));
    }
}
BENCHMARK(BM_Honda)->Arg(15)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_VerifyLogalg1a(benchmark::State &state)
{
    const int prec = static_cast<int>(state.range(0));
    const NewformCoeffs f = eta_product_coeffs(11, coefficients_needed(prec));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_logalg1a(f, curve11(), prec));
    }
}
BENCHMARK(BM_VerifyLogalg1a)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_VerifyMainA(benchmark::State &state)
{
    const int prec = static_cast<int>(state.range(0));
    const NewformCoeffs f = eta_product_coeffs(11, coefficients_needed(prec));
    const BetaPoly beta = parse_beta("1,-1@1");
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_main_a(beta, f, curve11(), prec));
    }
}
BENCHMARK(BM_VerifyMainA)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

} // namespace
