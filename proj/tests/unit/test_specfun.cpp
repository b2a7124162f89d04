#include <doctest.h>

#include "oracles/frozen.hpp"
#include "oracles/oracles.hpp"
#include "rmt/quad.hpp"
#include "rmt/specfun.hpp"

using namespace rmt;
using namespace rmt::specfun;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }
cplx to_c(oracle::cld z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

}  // namespace

TEST_CASE("gamma: classical values") {
    CHECK(rel(specfun::gamma(5.0), 24.0) < 1e-14);
    CHECK(rel(specfun::gamma(0.5), std::sqrt(kPi)) < 1e-14);
    const cplx p = specfun::gamma(cplx(1.0, 0.5)) * specfun::gamma(cplx(1.0, -0.5));
    CHECK(rel(p, (kPi / 2) / std::sinh(kPi / 2)) < 1e-13);
    CHECK(rel(p, frozen::gamma_product_half_re) < 1e-13);
}

TEST_CASE("gamma: frozen points and the Stirling oracle") {
    for (const auto& r : frozen::kGammaPoints) {
        const cplx s(r.s_re, r.s_im);
        CHECK(rel(specfun::gamma(s), cplx(r.re, r.im)) < 1e-12);
    }
    double worst = 0.0;
    for (double re : {0.15, 0.7, 2.0, 7.5, 20.0, 45.0})
        for (double im : {-50.0, -12.0, -1.0, 0.0, 0.3, 8.0, 33.0}) {
            const cplx s(re, im);
            if (std::abs(s) > 50.0) continue;
            worst = std::max(worst, rel(specfun::gamma(s), to_c(oracle::gamma_stirling({re, im}))));
        }
    CHECK(worst < 1e-12);
}

TEST_CASE("gamma: reflection region, conjugate symmetry, and log branch") {
    const cplx s(-3.3, 2.2);
    CHECK(rel(specfun::gamma(s), to_c(oracle::gamma_stirling({-3.3L, 2.2L}))) < 1e-12);
    CHECK(std::abs(specfun::gamma(std::conj(s)) - std::conj(specfun::gamma(s))) < 1e-15 * std::abs(specfun::gamma(s)));
    CHECK(rel(std::exp(log_gamma(cplx(30.0, 40.0))), specfun::gamma(cplx(30.0, 40.0))) < 1e-11);
    CHECK_THROWS_AS(specfun::gamma(0.0), DomainError);
    CHECK_THROWS_AS(specfun::gamma(-3.0), DomainError);
}

TEST_CASE("zeta: classical values, sign at 3/4, pole") {
    CHECK(rel(zeta(2.0), kPi * kPi / 6) < 1e-14);
    CHECK(rel(zeta(3.0), frozen::zeta_3) < 1e-14);
    CHECK(zeta(0.75).real() < 0.0);
    CHECK(rel(zeta(0.75), frozen::zeta_0p75) < 1e-13);
    CHECK_THROWS_AS(zeta(1.0), DomainError);
}

TEST_CASE("zeta: frozen points") {
    for (const auto& r : frozen::kZetaPoints) {
        const cplx s(r.s_re, r.s_im);
        const cplx ref(r.re, r.im);
        // Near a zero only an absolute comparison is meaningful.
        CHECK(std::abs(zeta(s) - ref) < 1e-10 * std::max(1.0, std::abs(ref)));
    }
}

TEST_CASE("zeta: Euler-Maclaurin long double oracle on the test strip") {
    double worst = 0.0;
    for (double re : {0.5, 0.9, 1.5, 2.5, 4.0})
        for (double im : {-30.0, -7.0, 0.5, 3.0, 14.0, 30.0}) {
            const cplx z = zeta(cplx(re, im));
            worst = std::max(worst, rel(z, to_c(oracle::zeta_em({re, im}))));
        }
    CHECK(worst < 1e-10);
}

TEST_CASE("zeta: removable factor zero of 1 - 2^{1-s}") {
    const cplx s(1.0, 2.0 * kPi / kLn2);
    CHECK(rel(zeta(s), to_c(oracle::zeta_em({1.0L, static_cast<long double>(s.imag())}))) < 1e-10);
}

TEST_CASE("zeta functional equation on the critical strip grid") {
    double worst = 0.0;
    for (double re = 0.2; re <= 0.8 + 1e-12; re += 0.1)
        for (double im = -20.0; im <= 20.0 + 1e-12; im += 2.5) {
            const cplx s(re, im);
            const cplx rhs = std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(kPi * s / 2.0) * specfun::gamma(1.0 - s) *
                             zeta(1.0 - s);
            worst = std::max(worst, std::abs(zeta(s) - rhs));
        }
    CHECK(worst <= 1e-8);
}

TEST_CASE("zeta: conjugate symmetry") {
    const cplx s(0.3, 17.0);
    CHECK(std::abs(zeta(std::conj(s)) - std::conj(zeta(s))) < 1e-14);
}

TEST_CASE("eta") {
    CHECK(rel(eta(1.0), kLn2) < 1e-14);
    CHECK(rel(eta(2.0), kPi * kPi / 12) < 1e-14);
    CHECK(rel(eta(0.75), (1.0 - std::pow(2.0, 0.25)) * frozen::zeta_0p75) < 1e-13);
    CHECK(eta(0.75).real() > 0.0);
}

TEST_CASE("bessel K: closed form, series oracle, frozen values") {
    CHECK(std::abs(bessel_k(BesselOrder::real(0.5), 1.0).value - std::sqrt(kPi / 2) * std::exp(-1.0)) <= 1e-10);
    for (double x : {0.05, 0.3, 1.0, 2.5, 4.0})
        CHECK(std::abs(bessel_k0(x) - static_cast<double>(oracle::k0_series(x))) < 1e-12);
    CHECK(std::abs(bessel_k0(1.0) - frozen::k0_1) < 1e-14);
    CHECK(std::abs(bessel_k_imag(2.0, 1.0) - frozen::k_2i_1) < 1e-13);
    CHECK(std::abs(bessel_k_imag(3.0, 0.05) - frozen::k_3i_0p05) < 1e-10);
    CHECK(rel(bessel_k_real(7.5, 3.0), frozen::k_7p5_3) < 1e-12);
    CHECK(rel(bessel_k_real(17.0, 8.0), frozen::k_17_8) < 1e-12);
    for (double tau : {0.0, 1.0, 5.0, 20.0})
        for (double x : {0.05, 0.7, 3.0})
            CHECK(std::abs(bessel_k_imag(tau, x) - static_cast<double>(oracle::k_imag_simpson(tau, x))) < 1e-10);
    CHECK_THROWS_AS(bessel_k(BesselOrder::real(0.0), 0.0), DomainError);
}

TEST_CASE("bessel K: evenness and bound with r = 1") {
    CHECK_THROWS_AS(BesselOrder::imaginary(-2.0), DomainError);  // τ is stored nonnegative
    const double r = 1.0;
    CHECK(std::abs(bessel_k_imag(2.0, 1.0)) <= std::exp(-2.0 * r) * bessel_k0(std::cos(r)));
    double prev = 1e300;
    for (double x = 0.1; x < 10.0; x *= 1.3) {
        const double v = bessel_k0(x);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("bessel K from the Gamma-squared contour") {
    // (1/2πi)∫ Γ(s)² x^{-s} ds = 2 K0(2√x).
    for (double x : {0.5, 1.0, 2.0}) {
        const auto q = quad::integrate_contour([](cplx s) { return specfun::gamma(s) * specfun::gamma(s); }, {}, x);
        CHECK(std::abs(0.5 * q.value.real() - bessel_k0(2.0 * std::sqrt(x))) <= 1e-8);
    }
}

TEST_CASE("bessel J1") {
    CHECK(bessel_j1(0.0) == 0.0);
    CHECK(bessel_j1(1e-6) / 1e-6 == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(std::abs(bessel_j1(frozen::j1_zero)) < 1e-12);
    CHECK(std::abs(bessel_j1(10.0) - frozen::j1_10) < 1e-12);
    CHECK(std::abs(bessel_j1(45.0) - frozen::j1_45) < 1e-10);
    for (double x : {0.3, 2.0, 7.7, 15.0})
        CHECK(std::abs(bessel_j1(x) - static_cast<double>(oracle::j1_series(x))) < 1e-10);
}

TEST_CASE("legendre P^{1/2}: closed form values") {
    const double z = std::cosh(1.0);
    CHECK(std::abs(legendre_p_half(0.0, z).real() - std::sqrt(2.0 / (kPi * std::sinh(1.0)))) < 1e-14);
    CHECK(std::abs(legendre_p_half(1.0, 3.0).real() - frozen::legendre_closed_tau1_z3) < 1e-13);
    CHECK(std::abs(legendre_p_half(0.5, 2.0).real() - frozen::legendre_closed_tau0p5_z2) < 1e-13);
    CHECK(std::abs(legendre_p_half(2.0, 5.0).real() - frozen::legendre_closed_tau2_z5) < 1e-13);
    for (double tau : {0.0, 0.7, 3.0, 11.0}) CHECK(std::abs(legendre_p_half(tau, 1.7).imag()) <= 1e-12);
    CHECK_THROWS_AS(legendre_p_half(1.0, 1.0), DomainError);
}

TEST_CASE("log_sin agrees with log of sin for moderate arguments") {
    const cplx z(0.7, 3.0);
    CHECK(std::abs(std::exp(log_sin(z)) - std::sin(z)) < 1e-13 * std::abs(std::sin(z)));
    CHECK(std::isfinite(log_sin(cplx(0.3, 2000.0)).real()));
}
