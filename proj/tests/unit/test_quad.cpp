#include <doctest.h>

#include "oracles/frozen.hpp"
#include "rmt/quad.hpp"
#include "rmt/specfun.hpp"

using namespace rmt;
using namespace rmt::quad;

TEST_CASE("half-line rule on classical integrals") {
    const auto e = integrate_halfline([](double t) { return cplx(std::exp(-t), 0.0); });
    CHECK(std::abs(e.value.real() - 1.0) <= std::max(1e-10, e.abs_error_estimate));
    const auto bose = integrate_halfline([](double t) { return cplx(t / std::expm1(t), 0.0); });
    CHECK(std::abs(bose.value.real() - kPi * kPi / 6) <= 1e-10);
    const auto fermi = integrate_halfline([](double t) { return cplx(t / (std::exp(t) + 1.0), 0.0); });
    CHECK(std::abs(fermi.value.real() - kPi * kPi / 12) <= 1e-10);
}

TEST_CASE("finite and line rules") {
    const auto f = integrate_finite([](double x) { return cplx(1.0 / std::sqrt(x), 0.0); }, 0.0, 4.0);
    CHECK(std::abs(f.value.real() - 4.0) <= 1e-10);
    const auto g = integrate_line([](double v) { return cplx(std::exp(-v * v), 0.0); });
    CHECK(std::abs(g.value.real() - std::sqrt(kPi)) <= 1e-10);
    CHECK_THROWS_AS(integrate_halfline([](double t) { return cplx(1.0 / (1.0 + t), 0.0); }, 1e-12, 4000),
                    ConvergenceError);
}

TEST_CASE("gauss-legendre panels integrate polynomials exactly") {
    const auto r = gl_panels(-1.0, 3.0, 4);
    double s = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * std::pow(r.x[i], 9);
    CHECK(s == doctest::Approx((std::pow(3.0, 10) - 1.0) / 10.0).epsilon(1e-14));
}

TEST_CASE("contour examples") {
    const ContourSpec spec;
    const auto g = integrate_contour([](cplx s) { return specfun::gamma(s); }, spec, 1.0);
    CHECK(std::abs(g.value.real() - std::exp(-1.0)) <= 1e-10);
    const auto gz = integrate_contour([](cplx s) { return specfun::gamma(s) * specfun::zeta(s); }, spec, 1.0);
    CHECK(std::abs(gz.value.real() - frozen::gamma_zeta_contour_x1) <= 1e-10);
    const auto ge = integrate_contour([](cplx s) { return specfun::gamma(s) * specfun::eta(s); }, spec, 1.0);
    CHECK(std::abs(ge.value.real() - 1.0 / (std::exp(1.0) + 1.0)) <= 1e-10);
}

TEST_CASE("contour: node doubling stays within the estimate, shift independence") {
    auto f = [](cplx s) { return specfun::gamma(s) * specfun::zeta(s); };
    ContourSpec a, b;
    b.nodes = 2 * a.nodes;
    for (double x : {0.3, 1.0, 4.0}) {
        const auto ra = integrate_contour(f, a, x), rb = integrate_contour(f, b, x);
        CHECK(std::abs(ra.value - rb.value) <= ra.abs_error_estimate + 1e-15);
    }
    ContourSpec lo, hi;
    lo.c0 = 1.5;
    hi.c0 = 3.0;
    CHECK(std::abs(integrate_contour(f, lo, 1.0).value - integrate_contour(f, hi, 1.0).value) <= 1e-8);
}

TEST_CASE("contour: truncation height too small is reported") {
    ContourSpec spec;
    spec.height = 3.0;
    CHECK_THROWS_AS(integrate_contour([](cplx s) { return specfun::gamma(s); }, spec, 1.0), ConvergenceError);
}

TEST_CASE("contour spec validation") {
    ContourSpec spec;
    spec.nodes = 8;
    CHECK_THROWS(spec.validate());
    spec.nodes = 64;
    spec.height = -1.0;
    CHECK_THROWS(spec.validate());
}

TEST_CASE("cached evaluator matches the one-shot rule") {
    auto f = [](cplx s) { return specfun::gamma(s); };
    const ContourEvaluator ev(f, ContourSpec{});
    for (double x : {0.2, 1.0, 3.0}) {
        CHECK(std::abs(ev.eval(x).value - integrate_contour(f, {}, x).value) < 1e-15);
        CHECK(std::abs(ev.eval_log(std::log(x)).value.real() - std::exp(-x)) < 1e-10);
    }
}

TEST_CASE("window trapezoid") {
    const auto r = integrate_window([](double v) { return std::exp(-v * v); }, -10.0, 10.0, 0.25);
    CHECK(std::abs(r.value.real() - std::sqrt(kPi)) < 1e-13);
}
