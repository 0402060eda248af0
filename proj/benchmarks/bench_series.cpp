#include <benchmark/benchmark.h>

#include <qseries/eta.hpp>
#include <qseries/qseries.hpp>

using namespace qseries;

static void BM_EtaSeries(benchmark::State& state)
{
    const Rational order(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eta_series(order));
}
BENCHMARK(BM_EtaSeries)->Arg(100)->Arg(400)->Arg(1600);

static void BM_MulEta(benchmark::State& state)
{
    const auto eta = eta_series(Rational(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mul(eta, eta));
}
BENCHMARK(BM_MulEta)->Arg(100)->Arg(400)->Arg(1600);

// Dense rational coefficients: exercises the non-integer path of mul.
static void BM_MulRational(benchmark::State& state)
{
    const auto n = state.range(0);
    std::vector<Term> terms;
    for (std::int64_t i = 0; i < n; ++i) terms.push_back({i, make_rational(i % 7 - 3, 1 + i % 5)});
    const auto x = QSeries::from_terms(1, terms, Rational(n));
    for (auto _ : state) benchmark::DoNotOptimize(mul(x, x));
}
BENCHMARK(BM_MulRational)->Arg(50)->Arg(200);

static void BM_InvertEta(benchmark::State& state)
{
    const auto eta = eta_series(Rational(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(invert(eta));
}
BENCHMARK(BM_InvertEta)->Arg(100)->Arg(400)->Arg(1600);

static void BM_EtaPower(benchmark::State& state)
{
    const auto m = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eta_power(m, 100));
}
BENCHMARK(BM_EtaPower)->Arg(6)->Arg(28)->Arg(120)->Arg(378);

static void BM_G2(benchmark::State& state)
{
    const Rational order(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eisenstein_g2(order));
}
BENCHMARK(BM_G2)->Arg(1000)->Arg(10000);
