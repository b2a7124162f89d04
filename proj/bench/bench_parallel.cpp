// Serial reference against the fixed-block OpenMP reduction on the hot sums.
#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "rmt/arith.hpp"
#include "rmt/dirichlet.hpp"
#include "rmt/mellin.hpp"
#include "rmt/parallel.hpp"
#include "rmt/quad.hpp"
#include "rmt/specfun.hpp"

namespace {

using rmt::cplx;

const std::vector<cplx>& mu_coefficients() {
    static const std::vector<cplx> c = [] {
        const auto t = rmt::arith::build_table(rmt::arith::Fn::mu, 1'000'000);
        std::vector<cplx> v(t.size() + 1);
        for (std::size_t n = 1; n <= t.size(); ++n) v[n] = t[n];
        return v;
    }();
    return c;
}

void BM_PartialSumSerial(benchmark::State& st) {
    const auto& c = mu_coefficients();
    for (auto _ : st) benchmark::DoNotOptimize(rmt::dirichlet::partial_sum_serial(c, cplx(3.0, 1.0)));
}
void BM_PartialSumParallel(benchmark::State& st) {
    const auto& c = mu_coefficients();
    for (auto _ : st) benchmark::DoNotOptimize(rmt::dirichlet::partial_sum(c, cplx(3.0, 1.0)));
}

struct Line {
    std::vector<double> t;
    std::vector<cplx> wf;
};

const Line& gamma_line() {
    static const Line l = [] {
        const auto r = rmt::quad::gl_panels(-60.0, 60.0, 240);
        Line out;
        out.t = r.x;
        for (std::size_t j = 0; j < r.x.size(); ++j)
            out.wf.push_back(r.w[j] * rmt::specfun::gamma(cplx(2.0, r.x[j])) / (2.0 * rmt::kPi));
        return out;
    }();
    return l;
}

cplx line_term(const Line& l, double log_x, std::size_t j) {
    return l.wf[j] * std::exp(-cplx(2.0, l.t[j]) * log_x);
}

void BM_ContourSerial(benchmark::State& st) {
    const auto& l = gamma_line();
    for (auto _ : st)
        benchmark::DoNotOptimize(
            rmt::par::blocked_sum_serial<cplx>(l.t.size(), [&](std::size_t j) { return line_term(l, 0.3, j); }));
}
void BM_ContourParallel(benchmark::State& st) {
    const auto& l = gamma_line();
    for (auto _ : st)
        benchmark::DoNotOptimize(
            rmt::par::ordered_sum<cplx>(l.t.size(), [&](std::size_t j) { return line_term(l, 0.3, j); }));
}

// Σ K_{iτ}(n x), τ = 2, x = 0.05.
double ml_term(std::size_t i) { return rmt::specfun::bessel_k_imag(2.0, 0.05 * static_cast<double>(i + 1)); }

void BM_MlSeriesSerial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(rmt::par::blocked_sum_serial<double>(800, ml_term));
}
void BM_MlSeriesParallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(rmt::par::ordered_sum<double>(800, ml_term));
}

// Σ d(n)[K0(2√(nx)) - 4K0(2√(2nx)) + 4K0(4√(nx))] at x = 1.
const rmt::arith::ArithTable& divisor_table() {
    static const auto t = rmt::arith::build_table(rmt::arith::Fn::d, 4096);
    return t;
}
double bessel_term(std::size_t i) {
    const double r = std::sqrt(static_cast<double>(i + 1));
    return divisor_table()[i + 1].real() *
           (rmt::specfun::bessel_k0(2.0 * r) - 4.0 * rmt::specfun::bessel_k0(2.0 * std::sqrt(2.0) * r) +
            4.0 * rmt::specfun::bessel_k0(4.0 * r));
}

void BM_BesselSerial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(rmt::par::blocked_sum_serial<double>(4096, bessel_term));
}
void BM_BesselParallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(rmt::par::ordered_sum<double>(4096, bessel_term));
}

}  // namespace

BENCHMARK(BM_PartialSumSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PartialSumParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ContourSerial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ContourParallel)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MlSeriesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MlSeriesParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BesselSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BesselParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
