#include <benchmark/benchmark.h>

#include "qoperad/linalg.hpp"
#include "qoperad/loops.hpp"
#include "qoperad/qstate_operad.hpp"
#include "qoperad/squares.hpp"
#include "qoperad/symplectic.hpp"

using namespace qoperad;

static void BM_JacobiEigh(benchmark::State &state) {
    std::mt19937_64 rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix g = random_gaussian_matrix(n, n, rng);
    const Matrix h = g + g.adjoint();
    for (auto _ : state) benchmark::DoNotOptimize(jacobi_eigh(h));
}
BENCHMARK(BM_JacobiEigh)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

static void BM_GammaP(benchmark::State &state) {
    std::mt19937_64 rng(2);
    const auto m = static_cast<std::size_t>(state.range(0));
    const auto rho = random_density(m, rng);
    std::vector<DensityMatrix> parts;
    for (std::size_t i = 0; i < m; ++i) parts.push_back(random_density(3, rng));
    for (auto _ : state) benchmark::DoNotOptimize(gamma_p(rho, parts));
}
BENCHMARK(BM_GammaP)->Arg(2)->Arg(4)->Arg(8);

static void BM_GammaLambda(benchmark::State &state) {
    std::mt19937_64 rng(3);
    const auto m = static_cast<std::size_t>(state.range(0));
    const auto rho = random_density(m, rng);
    std::vector<DensityMatrix> parts;
    for (std::size_t i = 0; i < m; ++i) parts.push_back(random_density(3, rng));
    for (auto _ : state) benchmark::DoNotOptimize(gamma_lambda(rho, parts));
}
BENCHMARK(BM_GammaLambda)->Arg(2)->Arg(4)->Arg(8);

static void BM_IsStrict(benchmark::State &state) {
    const auto n = static_cast<unsigned>(state.range(0));
    const long long side = 1LL << n;
    std::vector<RationalRect> rects;
    // Diagonal cells except the last: strict, exercising the full scan.
    for (long long k = 0; k + 1 < side; ++k)
        rects.push_back({Rational(k, side), Rational(k + 1, side), Rational(k, side), Rational(k + 1, side)});
    const LittleSquareTuple c(rects);
    for (auto _ : state) benchmark::DoNotOptimize(is_strict(c, 2));
}
BENCHMARK(BM_IsStrict)->Arg(2)->Arg(4)->Arg(6);

static void BM_MoufangScan(benchmark::State &state) {
    const auto s = static_cast<std::size_t>(state.range(0));
    const auto m = FiniteMagma::cyclic(s);
    for (auto _ : state) benchmark::DoNotOptimize(is_moufang(m));
}
BENCHMARK(BM_MoufangScan)->Arg(4)->Arg(8)->Arg(16);

static void BM_AlgebraAction(benchmark::State &state) {
    std::mt19937_64 rng(4);
    const LittleSquareTuple c({RationalRect{0, Rational(1, 2), 0, Rational(1, 2)},
                               RationalRect{Rational(1, 2), 1, Rational(1, 2), 1}});
    const std::vector<AlmostSymplectic> parts{AlmostSymplectic::random(2, 2, rng), AlmostSymplectic::random(2, 2, rng)};
    for (auto _ : state) benchmark::DoNotOptimize(algebra_action(c, parts));
}
BENCHMARK(BM_AlgebraAction);
BENCHMARK_MAIN();
