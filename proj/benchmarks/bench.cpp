// Microbenchmarks for the hot paths: the 4^m classifier enumeration, the Q8
// basis-tuple kernel, generic Hamilton evaluation, the conjugation solver,
// and the exact sampler.

#include <benchmark/benchmark.h>

#include "quatimage/classify.hpp"
#include "quatimage/homogeneous.hpp"
#include "quatimage/polynomial.hpp"
#include "quatimage/random.hpp"
#include "quatimage/witness.hpp"

namespace {

using namespace quatimage;

void BM_ClassifyS4(benchmark::State& state) {
    const Polynomial p = parse("s4");
    for (auto _ : state) {
        ImageClassML cls = classify(p);
        benchmark::DoNotOptimize(cls);
    }
}
BENCHMARK(BM_ClassifyS4);

void BM_EvalOnBasisTuple(benchmark::State& state) {
    const Polynomial p = parse("s4");
    const BasisTuple t{BasisAxis::I, BasisAxis::J, BasisAxis::I,
                       BasisAxis::K};
    for (auto _ : state) {
        BasisValue v = eval_on_basis_tuple(p, t);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_EvalOnBasisTuple);

void BM_EvaluateGeneric(benchmark::State& state) {
    const Polynomial p = parse("s4");
    SplitMix64 rng(5);
    std::vector<Quaternion> args;
    for (int t = 0; t < 4; ++t) args.push_back(random_quaternion(rng, 50));
    for (auto _ : state) {
        Quaternion v = evaluate(p, args);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_EvaluateGeneric);

void BM_QuaternionProduct(benchmark::State& state) {
    SplitMix64 rng(6);
    const Quaternion a = random_quaternion(rng, 1000);
    const Quaternion b = random_quaternion(rng, 1000);
    for (auto _ : state) {
        Quaternion v = q_mul(a, b);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_QuaternionProduct);

void BM_SolveVectorConjugation(benchmark::State& state) {
    // Non-perfect-square norms force radical tower construction.
    const Quaternion v(ExactScalar(0), ExactScalar(2), ExactScalar(-3),
                       ExactScalar(6));
    const Quaternion u(ExactScalar(0), ExactScalar(1), ExactScalar(1),
                       ExactScalar(1));
    for (auto _ : state) {
        ConjugationMove m = solve_vector_conjugation(v, u);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_SolveVectorConjugation);

void BM_WitnessFull(benchmark::State& state) {
    const Polynomial p = parse("x1*x2");
    const ImageClassML cls = classify(p);
    const Quaternion t(ExactScalar(-2), ExactScalar(0), ExactScalar(1),
                       ExactScalar(-1));
    for (auto _ : state) {
        WitnessResult w = witness_full(p, cls, t);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_WitnessFull);

void BM_SampleBracketSquare(benchmark::State& state) {
    const Polynomial p = parse("[x1,x2]^2");
    const auto n = static_cast<long long>(state.range(0));
    for (auto _ : state) {
        SampleReport r = sample_image(p, n, 42, 100);
        benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SampleBracketSquare)->Arg(8)->Arg(64);

void BM_RadicalTowerArithmetic(benchmark::State& state) {
    const ExactScalar s2 = scalar_sqrt(ExactScalar(2));
    const ExactScalar s3 = scalar_sqrt(ExactScalar(3));
    const ExactScalar a = ExactScalar::rational(BigInt(3), BigInt(7)) + s2;
    const ExactScalar b = ExactScalar::rational(BigInt(-2), BigInt(5)) + s3;
    for (auto _ : state) {
        ExactScalar v = (a * b + a) / b;
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_RadicalTowerArithmetic);

}  // namespace

BENCHMARK_MAIN();
