#pragma once

// Independent reference evaluations used only by the tests. Everything here is
// written from textbook formulas and long double arithmetic; nothing calls into
// the library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using ld = long double;
using cld = std::complex<long double>;

inline constexpr ld kPiL = 3.141592653589793238462643383279502884L;
inline constexpr ld kEulerGamma = 0.577215664901532860606512090082402431L;

// Bernoulli numbers B_2, B_4, ..., B_24.
inline const ld kBernoulli[] = {
    1.0L / 6,     -1.0L / 30,        1.0L / 42,   -1.0L / 30,          5.0L / 66,   -691.0L / 2730,
    7.0L / 6,     -3617.0L / 510,    43867.0L / 798, -174611.0L / 330, 854513.0L / 138, -236364091.0L / 2730,
};

// Euler-Maclaurin: Σ_{n<M} n^{-s} + M^{1-s}/(s-1) + M^{-s}/2 + Σ_k B_{2k}/(2k)! s(s+1)...(s+2k-2) M^{-s-2k+1}.
inline cld zeta_em(cld s, int M = 40) {
    cld sum = 0;
    for (int n = 1; n < M; ++n) sum += std::pow(static_cast<ld>(n), -s);
    const ld m = M;
    sum += std::pow(m, 1.0L - s) / (s - 1.0L) + 0.5L * std::pow(m, -s);
    cld rising = s;  // s(s+1)...(s+2k-2)
    ld fact = 2;     // (2k)!
    for (int k = 1; k <= 12; ++k) {
        sum += kBernoulli[k - 1] / fact * rising * std::pow(m, -s - static_cast<ld>(2 * k - 1));
        rising *= (s + static_cast<ld>(2 * k - 1)) * (s + static_cast<ld>(2 * k));
        fact *= static_cast<ld>((2 * k + 1) * (2 * k + 2));
    }
    return sum;
}

// Stirling series for log Γ after shifting Re s above 20.
inline cld log_gamma_stirling(cld s) {
    cld shift = 0;
    while (s.real() < 20.0L) {
        shift += std::log(s);
        s += 1.0L;
    }
    const cld inv = 1.0L / s, inv2 = inv * inv;
    cld series = 0, p = inv;
    for (int k = 1; k <= 8; ++k) {
        series += kBernoulli[k - 1] / static_cast<ld>((2 * k) * (2 * k - 1)) * p;
        p *= inv2;
    }
    return (s - 0.5L) * std::log(s) - s + 0.5L * std::log(2.0L * kPiL) + series - shift;
}

inline cld gamma_stirling(cld s) { return std::exp(log_gamma_stirling(s)); }

// K0 by its ascending series; accurate for 0 < x ≤ 8 in long double.
inline ld k0_series(ld x) {
    const ld q = x * x / 4;
    ld term = 1, harmonic = 0, i0 = 0, tail = 0;
    for (int k = 0; k < 200; ++k) {
        if (k > 0) {
            term *= q / (static_cast<ld>(k) * k);
            harmonic += 1.0L / k;
        }
        i0 += term;
        tail += term * harmonic;
        if (term < 1e-30L * i0) break;
    }
    return -(std::log(x / 2) + kEulerGamma) * i0 + tail;
}

// J1 by its ascending series; fine for x ≤ 20 in long double.
inline ld j1_series(ld x) {
    ld term = x / 2, sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= -(x * x / 4) / (static_cast<ld>(k) * (k + 1));
        sum += term;
        if (std::fabs(term) < 1e-30L) break;
    }
    return sum;
}

// Composite Simpson on [a, b] with n (even) panels.
template <class F>
ld simpson(F&& f, ld a, ld b, int n) {
    const ld h = (b - a) / n;
    ld s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4 : 2) * f(a + i * h);
    return s * h / 3;
}

// K_{iτ}(x) = ∫_0^U e^{-x cosh u} cos(τu) du by Simpson.
inline ld k_imag_simpson(ld tau, ld x) {
    const ld U = std::acosh(1.0L + 800.0L / x);
    return simpson([&](ld u) { return std::exp(-x * std::cosh(u)) * std::cos(tau * u); }, 0.0L, U, 20000);
}

// Arithmetic functions by trial division and direct divisor enumeration.
inline std::vector<std::pair<std::uint64_t, int>> factor(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> f;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> d;
    for (std::uint64_t k = 1; k <= n; ++k)
        if (n % k == 0) d.push_back(k);
    return d;
}

inline int mobius(std::uint64_t n) {
    int sign = 1;
    for (auto [p, e] : factor(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

inline int big_omega(std::uint64_t n) {
    int c = 0;
    for (auto [p, e] : factor(n)) c += e;
    return c;
}

inline std::uint64_t totient(std::uint64_t n) {
    std::uint64_t c = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++c;
    return c;
}

inline std::uint64_t divisor_count(std::uint64_t n) { return divisors(n).size(); }

inline cld sigma(std::uint64_t n, cld a) {
    cld s = 0;
    for (auto d : divisors(n)) s += std::pow(static_cast<ld>(d), a);
    return s;
}

inline std::uint64_t greatest_odd(std::uint64_t n) {
    while (n % 2 == 0) n /= 2;
    return n;
}

}  // namespace oracle
