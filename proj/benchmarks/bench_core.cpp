#include <benchmark/benchmark.h>

#include "cxorder/bernstein.hpp"
#include "cxorder/conv_poly.hpp"
#include "cxorder/measure.hpp"
#include "cxorder/order.hpp"

using namespace cxorder;

namespace {

DiscreteMeasure spread(int atoms, int shift) {
    std::vector<Atom> a;
    for (int i = 0; i < atoms; ++i) a.push_back({Rational(i * 3 + shift, 7), Rational(i % 3 + 1)});
    const DiscreteMeasure m = make_measure(std::move(a));
    return mix(std::vector<Rational>{Rational(1) / m.mass()}, std::vector<DiscreteMeasure>{m});
}

void BM_Convolve(benchmark::State& state) {
    const auto mu = spread(static_cast<int>(state.range(0)), 0);
    const auto nu = spread(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(convolve(mu, nu));
}
BENCHMARK(BM_Convolve)->Arg(8)->Arg(32)->Arg(128);

void BM_RasaCriterion(benchmark::State& state) {
    const auto mu = spread(static_cast<int>(state.range(0)), 0);
    const auto nu = spread(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(rasa_criterion(mu, nu));
}
BENCHMARK(BM_RasaCriterion)->Arg(8)->Arg(32);

void BM_RasaDirect(benchmark::State& state) {
    const auto mu = spread(static_cast<int>(state.range(0)), 0);
    const auto nu = spread(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(rasa_direct(mu, nu));
}
BENCHMARK(BM_RasaDirect)->Arg(8)->Arg(32);

void BM_MuirheadCx(benchmark::State& state) {
    const std::vector<DiscreteMeasure> ms{binomial_measure(3, Rational(1, 4)), binomial_measure(3, Rational(1, 2)),
                                          binomial_measure(3, Rational(3, 4))};
    const ExponentTuple p{2, 1, 1}, q{4, 0, 0};
    for (auto _ : state) benchmark::DoNotOptimize(muirhead_cx_check(p, q, ms));
}
BENCHMARK(BM_MuirheadCx);

void BM_GavreaP4(benchmark::State& state) {
    const Rational eps = Rational(1) / Rational(2).pow(static_cast<unsigned>(state.range(0)));
    const auto phi = ConvexTestFn::affine(Rational(0), Rational(1));
    for (auto _ : state) benchmark::DoNotOptimize(gavrea_p4_sum(1, Rational(1, 4), Rational(3, 4), phi, eps));
}
BENCHMARK(BM_GavreaP4)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_GavScan(benchmark::State& state) {
    const auto g = MultiFn::abs_diff(2, 0, 1);
    const std::vector<unsigned> ns{3, 3};
    const auto grid = unit_grid(16);
    for (auto _ : state)
        benchmark::DoNotOptimize(gav_scan(GavMode::P1Prime, g, ns, grid, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_GavScan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
