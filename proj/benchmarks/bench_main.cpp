#include <benchmark/benchmark.h>

#include <random>

#include "hciz/characters.hpp"
#include "hciz/expansions.hpp"
#include "hciz/haar_mc.hpp"
#include "hciz/integrals.hpp"
#include "hciz/monotone.hpp"
#include "hciz/plancherel.hpp"

using namespace hciz;

static void BM_CharacterTable(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CharacterTable t = character_table(d);
        benchmark::DoNotOptimize(t.values.size());
    }
}
BENCHMARK(BM_CharacterTable)->Arg(6)->Arg(8);

static void BM_ExpectOmegaInverse(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    Partition ones = Partition::one_column(d);
    for (auto _ : state) {
        Rational e = expect(ones, ones, ContentPoly::omega_inverse(d), d);
        benchmark::DoNotOptimize(e.get_d());
    }
}
BENCHMARK(BM_ExpectOmegaInverse)->Arg(5)->Arg(7)->Arg(9);

static void BM_AssembleI(benchmark::State& state) {
    int D = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto s = assemble_I(6, D);
        benchmark::DoNotOptimize(s.level(D).size());
    }
}
BENCHMARK(BM_AssembleI)->Arg(4)->Arg(6);

static void BM_SeriesLog(benchmark::State& state) {
    int D = static_cast<int>(state.range(0));
    auto s = assemble_I(8, D);
    for (auto _ : state) {
        auto lg = s.log();
        benchmark::DoNotOptimize(lg.level(D).size());
    }
}
BENCHMARK(BM_SeriesLog)->Arg(4)->Arg(6);

static void BM_WalksJm(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    Partition ones = Partition::one_column(d);
    for (auto _ : state) {
        Integer w = walks_jm(ones, ones, 2 * d);
        benchmark::DoNotOptimize(w.get_si());
    }
}
BENCHMARK(BM_WalksJm)->Arg(4)->Arg(6)->Arg(8);

static void BM_HaarSample(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    for (auto _ : state) {
        CMatrix u = sample_haar(N, rng);
        benchmark::DoNotOptimize(u(0, 0));
    }
}
BENCHMARK(BM_HaarSample)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

static void BM_McHciz(benchmark::State& state) {
    std::mt19937_64 rng(3);
    CMatrix A = sample_haar(3, rng), B = sample_haar(3, rng);
    for (auto _ : state) {
        MCEstimate e = mc_integral(MCKind::HCIZ, Cx(0.1, 0), A, B, 1000, 5);
        benchmark::DoNotOptimize(e.mean);
    }
}
BENCHMARK(BM_McHciz);

static void BM_SchurEval(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    std::vector<GaussianRational> x;
    for (int i = 1; i <= 6; ++i) x.emplace_back(rat(i, 7), rat(1, i));
    Partition lam = enumerate_partitions(d)[1 % enumerate_partitions(d).size()];
    for (auto _ : state) {
        GaussianRational v = schur_eval(lam, x);
        benchmark::DoNotOptimize(v.re.get_d());
    }
}
BENCHMARK(BM_SchurEval)->Arg(4)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
