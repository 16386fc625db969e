#include <benchmark/benchmark.h>

#include "gyrokit/bridges.hpp"
#include "gyrokit/endo.hpp"
#include "gyrokit/gyro.hpp"
#include "gyrokit/matalg.hpp"

using namespace gyrokit;

static void BM_EinsteinAdd(benchmark::State& state) {
    Rng rng(1);
    const Velocity u = sample_velocity(rng);
    const Velocity v = sample_velocity(rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(einstein_add(u, v));
}
BENCHMARK(BM_EinsteinAdd);

static void BM_Odot(benchmark::State& state) {
    Rng rng(2);
    const DensityMat a = sample_density(rng);
    const DensityMat b = sample_density(rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(odot(a, b));
}
BENCHMARK(BM_Odot);

static void BM_SqrtPosdef(benchmark::State& state) {
    Rng rng(3);
    const Mat2C a = sample_posdef(rng).mat();
    for (auto _ : state)
        benchmark::DoNotOptimize(sqrt_posdef(a));
}
BENCHMARK(BM_SqrtPosdef);

static void BM_AdjointRotation(benchmark::State& state) {
    Rng rng(4);
    const UnitaryMat2 u = sample_unitary(rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(adjoint_rotation(u));
}
BENCHMARK(BM_AdjointRotation);

static void BM_ClassifyBallEndo(benchmark::State& state) {
    Rng rng(5);
    const OrthogonalMat3 o = sample_rotation(rng);
    const BallMap f = [&o](const Vec3& v) { return o.mat() * v; };
    for (auto _ : state) {
        Rng probe_rng(6);
        benchmark::DoNotOptimize(classify_ball_endo(f, 1e-9, probe_rng));
    }
}
BENCHMARK(BM_ClassifyBallEndo);

BENCHMARK_MAIN();
