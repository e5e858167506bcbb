#include <benchmark/benchmark.h>

#include "sl2bir/birmap.hpp"
#include "sl2bir/embedding.hpp"
#include "sl2bir/intmatrix.hpp"
#include "sl2bir/picard.hpp"
#include "sl2bir/poly.hpp"
#include "sl2bir/word.hpp"

using namespace sl2bir;

namespace {

// Dense bivariate polynomial of total degree d with small distinct coefficients.
MultiPoly dense2(int d) {
    std::vector<std::pair<Exp, Scalar>> ts;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j + i <= d; ++j)
            ts.push_back({Exp{i, j, 0, 0}, Scalar(1 + ((7 * i + 3 * j) % 11))});
    return MultiPoly::from_terms(2, ts);
}

void BM_PolyMul(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    MultiPoly a = dense2(d), b = dense2(d);
    for (auto _ : state) {
        MultiPoly c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_PolyMul)->Arg(4)->Arg(8)->Arg(16);

void BM_PolyGcd(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    MultiPoly g = dense2(2);
    MultiPoly a = dense2(d) * g, b = (dense2(d) + MultiPoly::constant(2, Scalar(1))) * g;
    for (auto _ : state) {
        MultiPoly c = poly_gcd(a, b);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_PolyGcd)->Arg(2)->Arg(4)->Arg(6);

void BM_CertifiedCoprime(benchmark::State& state) {
    MultiPoly a = dense2(8), b = dense2(8) + MultiPoly::constant(2, Scalar(1));
    for (auto _ : state) {
        bool c = certified_coprime(a, b);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_CertifiedCoprime);

// Iterates of the standard embedding on a hyperbolic word; degree grows as
// the golden-mean-squared power, so term counts climb fast with N.
void BM_ComposeIterates(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    EmbeddingSpec spec = EmbeddingSpec::standard();
    GroupWord w = GroupWord::parse("R S R^-1 S^-1");
    BirMap f = evaluate(spec, w);
    for (auto _ : state) {
        auto degs = iterate_degrees(f, N);
        benchmark::DoNotOptimize(degs);
    }
}
BENCHMARK(BM_ComposeIterates)->Arg(4)->Arg(8)->Arg(12);

void BM_CharPoly(benchmark::State& state) {
    IntMatrix m = word_isometry(1, {1, 2, 1, 2});
    for (auto _ : state) {
        UniPoly p = char_poly(m);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_CharPoly);

}  // namespace

BENCHMARK_MAIN();
