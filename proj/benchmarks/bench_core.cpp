#include <benchmark/benchmark.h>

#include <random>

#include "quot/root_engine.hpp"

using namespace quot;

namespace {

Series<Rat> random_series(std::mt19937_64& rng, long trunc) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    Series<Rat> s = Series<Rat>::zeroes(0, trunc, Rat(0));
    for (long n = 0; n < trunc; ++n)
        s.set(n, rat(num(rng), den(rng)));
    return s;
}

ZPoly<Rat> block(long N, long T) { // z^N - q(1-z)^N
    ZPoly<Rat> G;
    Series<Rat> q = Series<Rat>::variable(T, Rat(0));
    for (long k = 0; k <= N; ++k) {
        Rat c = binomial(N, k) * Rat(k % 2 ? -1 : 1);
        Series<Rat> s = q.scale(-c);
        if (k == N)
            s = s + Series<Rat>::constant(Rat(1), T);
        G.push_back(s);
    }
    return G;
}

std::vector<Rat> monic_g0(long N) {
    std::vector<Rat> g0(static_cast<std::size_t>(N + 1), Rat(0));
    g0.back() = Rat(1);
    return g0;
}

} // namespace

static void BM_SeriesMul(benchmark::State& state) {
    long T = state.range(0);
    std::mt19937_64 rng(1);
    Series<Rat> a = random_series(rng, T), b = random_series(rng, T);
    for (auto _ : state) {
        Series<Rat> c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_SeriesMul)->Arg(32)->Arg(64)->Arg(128);

static void BM_HenselN3(benchmark::State& state) {
    long T = state.range(0);
    ZPoly<Rat> G = block(3, T);
    for (auto _ : state) {
        auto pr = hensel_factor(G, 3, monic_g0(3));
        benchmark::DoNotOptimize(pr);
    }
}
BENCHMARK(BM_HenselN3)->Arg(10)->Arg(20);

static void BM_TraceEval(benchmark::State& state) {
    long T = state.range(0);
    auto [p, h] = hensel_factor(block(3, T), 3, monic_g0(3));
    RootExpr<Rat> z = RootExpr<Rat>::poly(
        {Series<Rat>::constant(Rat(1), T), Series<Rat>::constant(Rat(2), T),
         Series<Rat>::constant(Rat(1), T)});
    for (auto _ : state) {
        Series<Rat> t = trace_eval(p, z);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_TraceEval)->Arg(10)->Arg(16);

static void BM_NormEval(benchmark::State& state) {
    long T = state.range(0);
    auto [p, h] = hensel_factor(block(3, T), 3, monic_g0(3));
    RootExpr<Rat> e;
    e.num = {Series<Rat>::constant(Rat(1), T), Series<Rat>::constant(Rat(-2), T),
             Series<Rat>::constant(Rat(1), T)};
    e.den = {Series<Rat>::constant(Rat(1), T), Series<Rat>::constant(Rat(1), T)};
    for (auto _ : state) {
        Series<Rat> n = norm_eval(p, e);
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_NormEval)->Arg(10)->Arg(16);

BENCHMARK_MAIN();
