#pragma once

#include "rmt/core.hpp"

namespace rmt::specfun {

// Euler gamma and its logarithm. log_gamma returns a branch of log Γ(s)
// whose exponential is Γ(s); use it for overflow-free products and ratios.
cplx gamma(cplx s);
cplx log_gamma(cplx s);

// Riemann zeta. Throws DomainError at s = 1.
cplx zeta(cplx s);

// eta(s) = (1 - 2^{1-s}) zeta(s) = Σ (-1)^{n-1} n^{-s}; no pole at s = 1.
cplx eta(cplx s);

struct BesselOrder {
    enum class Kind { real_order, imaginary_order };
    Kind kind = Kind::real_order;
    double value = 0.0;

    static BesselOrder real(double nu) { return {Kind::real_order, nu}; }
    static BesselOrder imaginary(double tau);
};

// K_ν(x) or K_{iτ}(x) from the cosh integral representation on the u half-line.
Estimate bessel_k(BesselOrder order, double x);
double bessel_k0(double x);
double bessel_k_imag(double tau, double x);
double bessel_k_real(double nu, double x);

double bessel_j1(double x);

// P^{1/2}_{(iτ-1)/2}(z) for z > 1, τ ≥ 0; real-valued, returned as complex.
cplx legendre_p_half(double tau, double z);

// log sin(z) without overflow for large |Im z|.
cplx log_sin(cplx z);

}  // namespace rmt::specfun
