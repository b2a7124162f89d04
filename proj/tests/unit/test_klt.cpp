#include <doctest.h>

#include "oracles/frozen.hpp"
#include "oracles/oracles.hpp"
#include "rmt/arith.hpp"
#include "rmt/klt.hpp"
#include "rmt/specfun.hpp"

using namespace rmt;
using namespace rmt::klt;

namespace {

const quad::ContourSpec kSpec{};

// ∫_0^U cos(τu) du / (e^{x cosh u} - 1) by Simpson in long double.
double ml_oracle(double tau, double x) {
    const oracle::ld U = std::acosh(1.0L + 800.0L / x);
    return static_cast<double>(oracle::simpson(
        [&](oracle::ld u) { return std::cos(tau * u) / std::expm1(x * std::cosh(u)); }, 0.0L, U, 40000));
}

}  // namespace

TEST_CASE("kernel: three methods and the integral oracle on the grid") {
    for (double tau : {0.0, 0.5, 1.0, 2.0})
        for (double x : {0.25, 1.0, 4.0}) {
            const double ref = ml_oracle(tau, x);
            const auto s = ml_kernel(tau, x, KernelMethod::series);
            const auto c = ml_kernel(tau, x, KernelMethod::contour, kSpec);
            const auto i = ml_kernel(tau, x, KernelMethod::integral);
            INFO("tau=" << tau << " x=" << x);
            CHECK(std::abs(s.value - ref) < 1e-10);
            CHECK(std::abs(s.value - c.value) <= 1e-8);
            CHECK(std::abs(i.value - ref) < 1e-10);
            CHECK(std::abs(c.imag_residue) < 1e-10);
        }
    CHECK(std::abs(ml_kernel(0.0, 1.0, KernelMethod::series).value - frozen::ml_tau0_x1) < 1e-13);
}

TEST_CASE("kernel: evenness in tau, small x, domain") {
    CHECK(ml_kernel(-1.5, 0.8, KernelMethod::series).value == ml_kernel(1.5, 0.8, KernelMethod::series).value);
    const auto a = ml_kernel_auto(1.0, 0.01);
    CHECK(std::abs(a.value - ml_oracle(1.0, 0.01)) < 1e-8 * std::abs(a.value));
    CHECK_THROWS_AS(ml_kernel(1.0, 0.0, KernelMethod::series), DomainError);
    CHECK(parse_kernel_method("contour") == KernelMethod::contour);
    CHECK_THROWS_AS(parse_kernel_method("fft"), UsageError);
}

TEST_CASE("moment identity") {
    CHECK(std::abs(ml_mellin_moment(1.0, 2.0).real() - frozen::ml_moment_tau1_s2_re) < 1e-13);
    for (double tau : {0.0, 1.0, 3.0})
        for (cplx s : {cplx(2.0, 0.0), cplx(3.0, 0.0), cplx(2.5, 1.0)}) {
            const auto q = ml_moment_quadrature(tau, s);
            CHECK(std::abs(q.value - ml_mellin_moment(tau, s)) <= std::max(1e-6, q.abs_error));
        }
    CHECK_THROWS_AS(ml_mellin_moment(1.0, 0.8), DomainError);
}

TEST_CASE("forward transform of the reference function") {
    const auto f = reference_test_function();
    for (const auto& [tau, ref] : {std::pair{1.0, frozen::klt_forward_tau1}, std::pair{2.0, frozen::klt_forward_tau2}}) {
        const auto r = klt_forward(f, tau, kSpec);
        CHECK(std::abs(r.contour.value - ref) < 1e-9);
        CHECK(std::abs(r.halfline.value - ref) < 1e-8);
        const ForwardContour cached(f, 60.0, 1920);
        CHECK(std::abs(cached(tau).value - r.contour.value) < 1e-10);
    }
}

TEST_CASE("zero function has zero transform") {
    const KltTestFunction z{mellin::MellinPair::zero().with_c0(-1.0), 2.0};
    const ForwardContour M(z, 60.0, 1920);
    CHECK(M(1.0).value == 0.0);
    const auto r = klt_invert([&](double t) { return M(t).value; }, 1.0);
    CHECK(r.value == 0.0);
}

TEST_CASE("composition with the truncated series") {
    const auto f = reference_test_function();
    for (double tau : {0.5, 1.0, 2.0}) {
        const auto r = composition_check(f, tau, 1000, kSpec);
        CHECK(r.difference <= 1e-5);
        CHECK(r.difference <= r.series_tail + r.ml_transform.abs_error + r.kl_transform.abs_error + 1e-12);
    }
}

TEST_CASE("inversion kernel: closed term, forms, convergence in N") {
    // The closed Legendre form reduces to a cosine of half the hyperbolic angle.
    for (double tau : {0.5, 1.0, 3.0})
        for (double y : {0.5, 2.0, 20.0}) {
            const double al = std::acosh(1.0 + 8.0 * kPi * kPi / (y * y));
            const double ref = 2.0 / (kPi * tau * std::sinh(0.5 * kPi * tau)) * std::cos(0.5 * tau * al);
            CHECK(std::abs(inversion_term(tau, y) - ref) < 1e-12 * std::max(1.0, std::abs(ref)));
        }
    const std::size_t N = 2000;
    double m1 = 0.0;
    for (std::uint64_t n = 1; n <= N; ++n) m1 += oracle::mobius(n) / double(n);
    for (double tau : {0.5, 2.0}) {
        const double pref = 2.0 / (kPi * tau * std::sinh(0.5 * kPi * tau));
        const auto acc = inversion_kernel(tau, 1.0, N);
        const auto lit = inversion_kernel(tau, 1.0, N, KernelForm::literal);
        CHECK(std::abs(lit.value - acc.value - pref * m1) < 1e-12);
        const auto big = inversion_kernel(tau, 1.0, 4 * N);
        CHECK(std::abs(big.value - acc.value) <= acc.tail);
    }
    CHECK_THROWS_AS(inversion_kernel(0.0, 1.0, 10), DomainError);
    CHECK_THROWS_AS(inversion_kernel(1.0, 1.0, 0), DomainError);
}

TEST_CASE("cosine step") {
    const auto f = reference_test_function();
    for (double u : {0.0, 0.5}) {
        const auto r = cosine_step(f, u);
        CHECK(r.difference <= std::max(1e-6, r.abs_error));
    }
}

TEST_CASE("index inversion of the reference function improves with tau_max and N") {
    const auto f = reference_test_function();
    const ForwardContour M(f, 64.0, 2048);
    auto Mf = [&](double t) { return M(t).value; };
    for (double x : {0.5, 1.0}) {
        const double target = x * mellin::builtin_physical("klt_ref", x);
        double prev = 1e300;
        for (auto [tm, N] : {std::pair{6.0, std::size_t{500}}, std::pair{12.0, std::size_t{1000}},
                             std::pair{24.0, std::size_t{2000}}}) {
            const double rel = std::abs(klt_invert(Mf, x, tm, N).value - target) / std::abs(target);
            CHECK(rel < prev);
            prev = rel;
        }
        CHECK(prev < 0.05);
    }
}
