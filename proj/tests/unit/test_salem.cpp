#include <doctest.h>

#include "oracles/frozen.hpp"
#include "oracles/oracles.hpp"
#include "rmt/salem.hpp"
#include "rmt/specfun.hpp"

using namespace rmt;
using namespace rmt::salem;

namespace {

const quad::ContourSpec kSpec{};
const KernelOrder kOrders[] = {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}};
const double kFrozenU[5][3] = {
    {frozen::U_00_x0p5, frozen::U_00_x1, frozen::U_00_x2}, {frozen::U_01_x0p5, frozen::U_01_x1, frozen::U_01_x2},
    {frozen::U_11_x0p5, frozen::U_11_x1, frozen::U_11_x2}, {frozen::U_12_x0p5, frozen::U_12_x1, frozen::U_12_x2},
    {frozen::U_22_x0p5, frozen::U_22_x1, frozen::U_22_x2},
};

}  // namespace

TEST_CASE("U kernels: frozen values and both representations") {
    const double xs[] = {0.5, 1.0, 2.0};
    for (int i = 0; i < 5; ++i) {
        const UKernel U(kOrders[i], kSpec);
        for (int j = 0; j < 3; ++j) {
            const auto c = U(xs[j]);
            const auto v = u_convolution(kOrders[i], xs[j]);
            INFO("k=" << kOrders[i].k << " m=" << kOrders[i].m << " x=" << xs[j]);
            CHECK(std::abs(c.value - kFrozenU[i][j]) < 1e-9);
            if (kOrders[i].m <= 2) CHECK(std::abs(c.value - v.value) <= 1e-7);
        }
    }
    // U_{0,0} is the Fermi function itself.
    for (double x : {0.01, 0.3, 5.0, 20.0})
        CHECK(std::abs(u_kernel({0, 0}, x, UMethod::contour, kSpec).value - 1.0 / (std::exp(x) + 1.0)) < 1e-10);
    // The pole at s = 0 sets U(0+) = η(0)^{k+1}·[m = 0] limit: U_{0,0}(0+) = 1/2.
    CHECK(std::abs(u_kernel({0, 0}, 1e-4, UMethod::contour, kSpec).value - 1.0 / (std::exp(1e-4) + 1.0)) < 1e-9);
}

TEST_CASE("U kernels: order validation") {
    CHECK_THROWS_AS(KernelOrder({2, 1}).validate(), DomainError);
    CHECK_THROWS_AS(KernelOrder({0, 4}).validate(), UsageError);
    CHECK_THROWS_AS(u_convolution({0, 3}, 1.0), UsageError);
    CHECK_THROWS_AS(parse_u_method("fft"), UsageError);
}

TEST_CASE("moments of U") {
    CHECK(std::abs(u_mellin_moment({1, 1}, 0.75).real() - frozen::moment_11_0p75) < 1e-13);
    CHECK(std::abs(u_mellin_moment({0, 0}, 0.75).real() - frozen::moment_00_0p75) < 1e-13);
    for (const auto& o : kOrders)
        for (cplx s : {cplx(0.75, 0.0), cplx(2.0, 0.0), cplx(1.5, 2.0)}) {
            const auto q = u_moment_quadrature(o, s, kSpec);
            CHECK(std::abs(q.value - u_mellin_moment(o, s)) <= std::max(1e-6, q.abs_error));
        }
}

TEST_CASE("factorization of the double integral") {
    const auto r = factorization_integral(2.0);
    const double eta2 = kPi * kPi / 12;
    CHECK(std::abs(r.value - eta2 * eta2) < 1e-6);
    CHECK(std::abs(r.value - frozen::factorization_s2) < 1e-6);
}

TEST_CASE("Bessel series identity") {
    const double half_v[] = {frozen::half_V_x1, frozen::half_V_x2, frozen::half_V_x4};
    const double xs[] = {1.0, 2.0, 4.0};
    for (int i = 0; i < 3; ++i) {
        const auto r = bessel_series_identity(xs[i], 200);
        CHECK(std::abs(r.lhs - half_v[i]) < 1e-10);
        CHECK(r.residual <= 1e-8);
        CHECK(r.residual <= r.tail_bound + r.lhs_error + 1e-14);
    }
    CHECK(std::abs(2.0 * frozen::half_V_x1 - frozen::U_11_x1) < 1e-15);
}

TEST_CASE("Bessel series tail bound and the term count") {
    const std::size_t N = terms_for_tail(4.0, 1e-12);
    CHECK(N == 66);
    CHECK(bessel_series_tail(4.0, N) <= 1e-12);
    CHECK(bessel_series_tail(4.0, N - 1) > 1e-12);
    const auto short_sum = bessel_series_identity(4.0, N);
    CHECK(short_sum.residual <= 1e-12 + short_sum.lhs_error);
    double prev = 1e300;
    for (std::size_t n : {10, 40, 160, 640}) {
        const double t = bessel_series_tail(2.0, n);
        CHECK(t < prev);
        prev = t;
    }
}

TEST_CASE("bounded functions") {
    const auto one = parse_bounded("one");
    CHECK(one.f(-100.0) == 1.0);
    const auto ind = parse_bounded("indicator:-1,2");
    CHECK(ind.f(0.0) == 1.0);
    CHECK(ind.f(2.5) == 0.0);
    const auto bump = parse_bounded("bump:0,1");
    CHECK(bump.f(0.5) > 0.0);
    CHECK(bump.f(1.0) == 0.0);
    CHECK(parse_bounded("zero").is_zero());
    CHECK_THROWS_AS(parse_bounded("indicator:2,1"), DomainError);
    CHECK_THROWS_AS(parse_bounded("gauss"), UsageError);
}

TEST_CASE("residuals: zero, linearity, double integral equals the U_{1,1} kernel") {
    const SalemParam d{0.75};
    CHECK(double_residual(parse_bounded("zero"), d, 1.0).value == 0.0);
    const auto f = parse_bounded("indicator:0,2");
    const auto r1 = double_residual(f, d, 1.0);
    const auto r3 = double_residual(f.scaled(3.0), d, 1.0);
    CHECK(std::abs(r3.value - 3.0 * r1.value) <= 3.0 * r1.abs_error + 1e-14);
    const auto k = kernel_residual(f, d, 1.0, {1, 1}, kSpec);
    CHECK(std::abs(k.value - r1.value) <= std::max(1e-8, k.abs_error + r1.abs_error));
    CHECK_THROWS_AS(SalemParam{0.5}.validate(), DomainError);
    CHECK_THROWS_AS(SalemParam{1.0}.validate(), DomainError);
    // For f = 1 the residual is the moment η(δ)²Γ(δ)² times e^{-δx}.
    const auto c = kernel_residual(parse_bounded("one"), d, 0.0, {1, 1}, kSpec);
    CHECK(std::abs(c.value - frozen::moment_11_0p75) <= std::max(1e-7, c.abs_error));
}

TEST_CASE("Meijer combination is half the double residual") {
    const SalemParam d{0.75};
    for (const char* name : {"indicator:0,2", "bump:-1,1"}) {
        const auto f = parse_bounded(name);
        for (double x : {0.0, 1.5}) {
            const auto comb = meijer_combination(f, d, x);
            const auto dbl = double_residual(f, d, x);
            INFO(name << " x=" << x);
            CHECK(std::abs(comb.value - 0.5 * dbl.value) <= 1e-6);
        }
    }
    CHECK_THROWS_AS(meijer_combination(parse_bounded("one"), d, 0.0), DomainError);
}

TEST_CASE("Meijer peak moves right by ln 2 when n doubles") {
    const SalemParam d{0.75};
    // Brute-force argmax on a fine grid.
    auto argmax = [&](std::size_t n) {
        double best = -1.0, at = 0.0;
        for (double u = -30.0; u <= 30.0; u += 1e-4) {
            const double v = std::exp(-d.delta * u) * specfun::bessel_k0(2.0 * std::sqrt(double(n)) * std::exp(-0.5 * u));
            if (v > best) best = v, at = u;
        }
        return at;
    };
    for (std::size_t n : {1, 4}) {
        CHECK(std::abs(meijer_peak(n, d, 0.0) - argmax(n)) < 2e-4);
        CHECK(std::abs(meijer_peak(2 * n, d, 0.0) - meijer_peak(n, d, 0.0) - kLn2) < 1e-6);
    }
    CHECK(std::abs(meijer_peak(3, d, 1.0) - meijer_peak(3, d, 0.0) - 1.0) < 1e-6);
}

TEST_CASE("translation weight norm") {
    CHECK(std::abs(translation_weight_norm({0, 0}, {0.75}, kSpec).value - frozen::moment_00_0p75) < 1e-8);
    CHECK(std::abs(translation_weight_norm({1, 1}, {0.75}, kSpec).value - frozen::moment_11_0p75) < 1e-8);
}
