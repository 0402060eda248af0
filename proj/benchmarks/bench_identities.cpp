#include <benchmark/benchmark.h>

#include <qseries/macdonald.hpp>
#include <qseries/virasoro.hpp>
#include <qseries/wronskian.hpp>

using namespace qseries;

static void BM_MacdonaldRhs(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    const Rational order = 20 + make_rational(2 * k * k - k, 24);
    for (auto _ : state) benchmark::DoNotOptimize(macdonald_rhs(k, order));
}
BENCHMARK(BM_MacdonaldRhs)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

// (s,t) packed as s * 100 + t.
static void BM_GeneralRhs(benchmark::State& state)
{
    const auto model = make_model(static_cast<int>(state.range(0) / 100), static_cast<int>(state.range(0) % 100));
    const Rational order = 10 + make_rational(2 * model.k * model.k - model.k, 24);
    for (auto _ : state) benchmark::DoNotOptimize(general_rhs(model, order));
}
BENCHMARK(BM_GeneralRhs)->Arg(205)->Arg(304)->Arg(407)->Arg(508)->Unit(benchmark::kMillisecond);

static void BM_CharacterDoubleSum(benchmark::State& state)
{
    const auto model = make_model(5, 12);
    const auto label = make_label(model, 2, 3);
    const Rational order(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(character_double_sum(model, label, order));
}
BENCHMARK(BM_CharacterDoubleSum)->Arg(40)->Arg(200);

static void BM_WronskianNormalized(benchmark::State& state)
{
    const auto model = make_model(static_cast<int>(state.range(0) / 100), static_cast<int>(state.range(0) % 100));
    std::vector<QSeries> ys;
    for (const auto& l : distinct_weights(model)) ys.push_back(normalized_character(model, l, 12));
    const SeriesVector v(ys);
    for (auto _ : state) benchmark::DoNotOptimize(wronskian(v));
}
BENCHMARK(BM_WronskianNormalized)->Arg(205)->Arg(304)->Arg(407)->Arg(508)->Unit(benchmark::kMillisecond);

static void BM_VerifySuiteGrid(benchmark::State& state)
{
    const auto models = models_up_to(40);
    for (auto _ : state) {
        for (const auto& m : models) {
            benchmark::DoNotOptimize(verify_identity({IdentityKind::denominator, 0, m.s, m.t}, 10));
            benchmark::DoNotOptimize(verify_identity({IdentityKind::wronskian_normalized, 0, m.s, m.t}, 10));
        }
    }
}
BENCHMARK(BM_VerifySuiteGrid)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
