#include "rmt/specfun.hpp"

#include <array>
#include <cmath>
#include <string>

namespace rmt::specfun {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);

bool is_nonpositive_integer(cplx s) {
    return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

cplx log_gamma_right(cplx s) {
    const cplx z = s - 1.0;
    cplx a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + static_cast<double>(i));
    const cplx t = z + kLanczosG + 0.5;
    return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(a);
}

// Bernoulli numbers B_2 .. B_24.
constexpr std::array<double, 12> kBernoulli{
    1.0 / 6.0,         -1.0 / 30.0,        1.0 / 42.0,     -1.0 / 30.0,
    5.0 / 66.0,        -691.0 / 2730.0,    7.0 / 6.0,      -3617.0 / 510.0,
    43867.0 / 798.0,   -174611.0 / 330.0,  854513.0 / 138.0, -236364091.0 / 2730.0};

// Euler-Maclaurin for zeta; used where 1 - 2^{1-s} is too small to divide by.
cplx zeta_euler_maclaurin(cplx s) {
    const int n = 20 + static_cast<int>(std::ceil(std::abs(s)));
    cplx sum = 0.0;
    for (int k = n - 1; k >= 1; --k) sum += std::exp(-s * std::log(static_cast<double>(k)));
    const double ln = std::log(static_cast<double>(n));
    const cplx nps = std::exp(-s * ln);
    sum += nps * static_cast<double>(n) / (s - 1.0) + 0.5 * nps;
    // Σ B_2j/(2j)! s(s+1)...(s+2j-2) N^{-s-2j+1}
    cplx rising = s;         // s(s+1)...(s+2j-2)
    cplx power = nps / static_cast<double>(n);  // N^{-s-1}
    double fact = 2.0;       // (2j)!
    for (int j = 1; j <= 12; ++j) {
        sum += kBernoulli[j - 1] / fact * rising * power;
        rising *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
        power /= static_cast<double>(n) * n;
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    return sum;
}

constexpr int kMaxCvzTerms = 400;

const std::array<double, kMaxCvzTerms + 1>& log_table() {
    static const auto table = [] {
        std::array<double, kMaxCvzTerms + 1> t{};
        for (int k = 1; k <= kMaxCvzTerms; ++k) t[k] = std::log(static_cast<double>(k));
        return t;
    }();
    return table;
}

// Alternating series Σ (-1)^k (k+1)^{-s} with the Cohen-Villegas-Zagier weights.
cplx eta_cvz(cplx s) {
    const auto& lg = log_table();
    const double t = std::abs(s.imag());
    const int n = std::min(kMaxCvzTerms, 30 + static_cast<int>(std::ceil(1.8 * t)));
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0;
    double c = -d;
    cplx sum = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        sum += c * std::exp(-s * lg[k + 1]);
        b = (static_cast<double>(k + n) * static_cast<double>(k - n)) * b /
            ((k + 0.5) * (k + 1.0));
    }
    return sum / d;
}

// 2^s π^{s-1} sin(πs/2) Γ(1-s), assembled in logs.
cplx functional_factor(cplx s) {
    const cplx l = s * kLn2 + (s - 1.0) * std::log(kPi) + log_sin(0.5 * kPi * s) + log_gamma(1.0 - s);
    return std::exp(l);
}

bool is_negative_even_integer(cplx s) {
    return s.imag() == 0.0 && s.real() < 0.0 && std::fmod(s.real(), 2.0) == 0.0;
}

}  // namespace

cplx log_sin(cplx z) {
    const double y = z.imag();
    if (std::abs(y) < 20.0) return std::log(std::sin(z));
    const cplx i(0.0, 1.0);
    if (y > 0.0) return std::log(0.5 * i) - i * z + std::log(1.0 - std::exp(2.0 * i * z));
    return std::log(-0.5 * i) + i * z + std::log(1.0 - std::exp(-2.0 * i * z));
}

cplx log_gamma(cplx s) {
    require_finite(s, "log_gamma");
    if (is_nonpositive_integer(s)) throw DomainError("gamma: pole at nonpositive integer");
    if (s.real() >= 0.5) return log_gamma_right(s);
    return std::log(kPi) - log_sin(kPi * s) - log_gamma_right(1.0 - s);
}

cplx gamma(cplx s) {
    const cplx g = std::exp(log_gamma(s));
    return s.imag() == 0.0 ? cplx(g.real(), 0.0) : g;
}

cplx eta(cplx s) {
    require_finite(s, "eta");
    if (s.real() > 0.0 && std::abs(s.imag()) <= 200.0) return eta_cvz(s);
    if (s == cplx(1.0, 0.0)) return kLn2;
    return (1.0 - std::exp((1.0 - s) * kLn2)) * zeta(s);
}

cplx zeta(cplx s) {
    require_finite(s, "zeta");
    if (s == cplx(1.0, 0.0)) throw DomainError("zeta: pole at s = 1");
    if (s.real() < 0.0) {
        if (is_negative_even_integer(s)) return 0.0;
        return functional_factor(s) * zeta(1.0 - s);
    }
    const cplx factor = 1.0 - std::exp((1.0 - s) * kLn2);
    if (std::abs(factor) < 0.1 || std::abs(s.imag()) > 200.0) return zeta_euler_maclaurin(s);
    const cplx z = eta_cvz(s) / factor;
    return s.imag() == 0.0 ? cplx(z.real(), 0.0) : z;
}

BesselOrder BesselOrder::imaginary(double tau) {
    if (!(tau >= 0.0)) throw DomainError("BesselOrder: imaginary order requires tau >= 0");
    return {Kind::imaginary_order, tau};
}

Estimate bessel_k(BesselOrder order, double x) {
    require_finite(x, "bessel_k");
    if (!(x > 0.0)) throw DomainError("bessel_k: x must be positive");
    const bool imag = order.kind == BesselOrder::Kind::imaginary_order;
    const double nu = std::abs(order.value);
    if (imag && order.value < 0.0) throw DomainError("bessel_k: imaginary order requires tau >= 0");
    // Scaled integrand e^{-x(cosh u - 1)}·w(u); cut where it is below e^{-45} of the peak.
    double U = std::acosh(1.0 + 45.0 / x);
    if (!imag && nu > 0.0) {
        // Exponent νu - x(cosh u - 1) peaks at asinh(ν/x); walk right until 45 below the peak.
        auto g = [&](double u) { return nu * u - x * (std::cosh(u) - 1.0); };
        const double us = std::asinh(nu / x);
        U = us + 0.25;
        while (g(U) > g(us) - 45.0) U += 0.25;
    }
    // Step: resolve the Gaussian core of width x^{-1/2} and, for K_{iτ}, keep e^{-π²/h + πτ/2} tiny.
    double h = std::min(0.1, 0.6 / std::sqrt(std::max(x, 1.0)));
    if (imag) h = std::min(h, kPi * kPi / (45.0 + 0.5 * kPi * nu));
    if (!imag && nu > 0.0) h = std::min(h, 0.6 / std::sqrt(std::max(1.0, std::hypot(x, nu))));
    const int n = static_cast<int>(std::ceil(U / h));
    h = U / n;
    auto w = [&](double u) {
        const double e = std::exp(-x * (std::cosh(u) - 1.0));
        if (imag) return e * std::cos(nu * u);
        // cosh(νu)·e^{-x(cosh u-1)} combined in the exponent to avoid overflow
        return 0.5 * (std::exp(nu * u - x * (std::cosh(u) - 1.0)) + std::exp(-nu * u - x * (std::cosh(u) - 1.0)));
    };
    double fine = 0.5 * w(0.0);
    double coarse = 0.5 * w(0.0);
    for (int j = 1; j <= n; ++j) {
        const double v = w(j * h);
        fine += v;
        if (j % 2 == 0) coarse += v;
    }
    fine *= h;
    coarse *= 2.0 * h;
    const double scale = std::exp(-x);
    return {fine * scale, std::abs(fine - coarse) * scale + 4e-16 * std::abs(fine) * scale};
}

double bessel_k0(double x) { return bessel_k(BesselOrder::imaginary(0.0), x).value; }
double bessel_k_imag(double tau, double x) { return bessel_k(BesselOrder::imaginary(tau), x).value; }
double bessel_k_real(double nu, double x) { return bessel_k(BesselOrder::real(nu), x).value; }

double bessel_j1(double x) {
    require_finite(x, "bessel_j1");
    if (x < 0.0) throw DomainError("bessel_j1: x must be nonnegative");
    if (x < 1e-3) {
        const double x2 = x * x;
        return 0.5 * x * (1.0 - x2 / 8.0 * (1.0 - x2 / 24.0));
    }
    // Periodic trapezoid of (1/2π)∫ cos(θ - x sin θ) dθ; aliasing error ~ J_{M-1}(x).
    const int m = static_cast<int>(std::ceil(1.5 * x)) + 60;
    double sum = 0.0;
    for (int j = 0; j < m; ++j) {
        const double th = 2.0 * kPi * j / m;
        sum += std::cos(th - x * std::sin(th));
    }
    return sum / m;
}

cplx legendre_p_half(double tau, double z) {
    require_finite(z, "legendre_p_half");
    if (!(z > 1.0)) throw DomainError("legendre_p_half: z must exceed 1");
    if (!(tau >= 0.0)) throw DomainError("legendre_p_half: tau must be nonnegative");
    const double alpha = std::acosh(z);
    const double sh = std::sqrt((z - 1.0) * (z + 1.0));
    return {std::sqrt(2.0 / (kPi * sh)) * std::cos(0.5 * tau * alpha), 0.0};
}

}  // namespace rmt::specfun
