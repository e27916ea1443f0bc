#include "fmcalc/asymptotics.hpp"
#include "fmcalc/curves.hpp"
#include "fmcalc/fmt.hpp"
#include "fmcalc/ring.hpp"

#include <benchmark/benchmark.h>

using namespace fmcalc;

namespace {

ChernVector sample(const Rational& n, const Rational& x, const Rational& S, const Rational& eta, const Rational& a,
                   const Rational& s) {
    return {n, x, DivisorB({S}), DivisorB({eta}), a, s};
}

const BaseGeometry& geometry() {
    static const BaseGeometry g = unit_geometry(-1);
    return g;
}

void BM_Mul(benchmark::State& state) {
    ChernVector a = sample(2, 1, ratio(1, 2), -3, ratio(7, 3), -1), b = sample(1, -2, 3, ratio(1, 5), 2, 4);
    for (auto _ : state) benchmark::DoNotOptimize(mul(geometry(), a, b));
}
BENCHMARK(BM_Mul);

void BM_PhiRoundTrip(benchmark::State& state) {
    ChernVector v = sample(2, 1, ratio(1, 2), -3, ratio(7, 3), -1);
    for (auto _ : state) benchmark::DoNotOptimize(phi_hat(geometry(), phi(geometry(), v)));
}
BENCHMARK(BM_PhiRoundTrip);

void BM_SolveTilt(benchmark::State& state) {
    CurveConstraint c = CurveConstraint::tilt(-1, 1, 2);
    Rational precision = pow2(-state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_u(c, 100, precision));
}
BENCHMARK(BM_SolveTilt)->Arg(64)->Arg(128);

void BM_ExpandTilt(benchmark::State& state) {
    CurveConstraint c = CurveConstraint::tilt(-1, 1, 2);
    for (auto _ : state) benchmark::DoNotOptimize(expand_u(c, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ExpandTilt)->Arg(8)->Arg(16);

void BM_ComparePhases(benchmark::State& state) {
    CurveConstraint c = CurveConstraint::tilt(-1, 1, 2);
    ChernVector M = sample(2, 1, ratio(1, 2), -3, ratio(7, 3), -1), N = sample(1, 1, 3, ratio(1, 5), 2, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            compare_phases(geometry(), M, N, c, ChargeKind::Reduced, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ComparePhases)->Arg(8)->Arg(16);

void BM_WallScan(benchmark::State& state) {
    CurveConstraint c = CurveConstraint::tilt(-1, 1, 2);
    ChernVector M = sample(0, 1, 0, 0, 0, 0), N = sample(1, 0, 0, 0, 0, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(wall_scan(geometry(), M, N, c, ChargeKind::Reduced, 2, 1000, pow2(-32)));
}
BENCHMARK(BM_WallScan);

} // namespace

BENCHMARK_MAIN();
