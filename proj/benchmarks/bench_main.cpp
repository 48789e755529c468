#include <benchmark/benchmark.h>

#include "trunclab/dpp_kernel.hpp"
#include "trunclab/eigensolver.hpp"
#include "trunclab/haar.hpp"
#include "trunclab/qr.hpp"
#include "trunclab/transport.hpp"

using namespace trunclab;

namespace {

ComplexMatrix ginibre(int n, std::uint64_t seed) {
    RngStream rng(seed);
    return sample_ginibre(n, rng);
}

void BM_QrDecompose(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ComplexMatrix a = ginibre(n, 1);
    for (auto _ : state) {
        QrFactors f = qr_decompose(a);
        benchmark::DoNotOptimize(f.r(0, 0));
    }
}
BENCHMARK(BM_QrDecompose)->Arg(64)->Arg(128)->Arg(256);

void BM_Eigenvalues(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ComplexMatrix a = ginibre(n, 2);
    for (auto _ : state) {
        auto eigs = eigenvalues(a);
        benchmark::DoNotOptimize(eigs.data());
    }
}
BENCHMARK(BM_Eigenvalues)->Arg(32)->Arg(64)->Arg(128);

void BM_HaarPipeline(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const TruncationEnsemble ens(n, n / 4);
    std::uint64_t trial = 0;
    for (auto _ : state) {
        RngStream rng = RngStream::for_trial(3, trial++);
        auto eigs = eigenvalues(truncate_and_scale(sample_haar_unitary(n, rng), ens));
        benchmark::DoNotOptimize(eigs.data());
    }
}
BENCHMARK(BM_HaarPipeline)->Arg(64)->Arg(128);

void BM_KernelDiag(benchmark::State& state) {
    const TruncationEnsemble ens(static_cast<int>(state.range(0)),
                                 static_cast<int>(state.range(0)) / 4);
    const KernelSpec spec = KernelSpec::make(ens);
    double r = 0.0;
    for (auto _ : state) {
        r += 1e-4;
        if (r > 1.0) r = 0.0;
        benchmark::DoNotOptimize(kernel_diag(spec, Complex(r, 0.0)));
    }
}
BENCHMARK(BM_KernelDiag)->Arg(100)->Arg(400);

void BM_ExpectedCountOutside(benchmark::State& state) {
    const TruncationEnsemble ens(100, 25);
    const KernelSpec spec = KernelSpec::make(ens);
    for (auto _ : state)
        benchmark::DoNotOptimize(expected_count_outside(spec, 1.1));
}
BENCHMARK(BM_ExpectedCountOutside);

void BM_W1Discrete(benchmark::State& state) {
    const std::size_t points = static_cast<std::size_t>(state.range(0));
    RngStream rng(5);
    std::vector<Complex> xs(points), ys(points * 10);
    for (Complex& x : xs) x = rng.complex_gaussian();
    for (Complex& y : ys) y = rng.complex_gaussian();
    const EmpiricalMeasure mu = EmpiricalMeasure::uniform_on(xs);
    const EmpiricalMeasure nu = EmpiricalMeasure::uniform_on(ys);
    for (auto _ : state)
        benchmark::DoNotOptimize(w1_discrete(mu, nu).value);
}
BENCHMARK(BM_W1Discrete)->Arg(20)->Arg(50)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
