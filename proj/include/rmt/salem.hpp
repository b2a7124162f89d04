#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "rmt/quad.hpp"

namespace rmt::salem {

struct KernelOrder {
    int k = 0;
    int m = 0;
    void validate() const;  // 0 ≤ k ≤ m ≤ 3
};

struct SalemParam {
    double delta = 0.75;
    void validate() const;  // 1/2 < δ < 1
};

enum class UMethod { contour, convolution };
std::string to_string(UMethod m);
UMethod parse_u_method(const std::string& text);

// [η(s)]^{k+1} Γ^{m+1}(s), η(s) = (1 - 2^{1-s}) ζ(s); Re s > 0.
cplx u_mellin_moment(KernelOrder order, cplx s);

// U_{k,m}(x) by inverse Mellin transform, with cached line samples.
// Near x = 0 the line is moved to Re s = -1/2 past the pole at s = 0,
// whose residue is taken on a small circle.
class UKernel {
public:
    explicit UKernel(KernelOrder order, const quad::ContourSpec& spec = {}, double c0 = 1.5);
    Estimate operator()(double x) const;
    Estimate at_log(double log_x) const;
    KernelOrder order() const { return order_; }

private:
    KernelOrder order_;
    std::shared_ptr<const quad::ContourEvaluator> direct_;
    std::shared_ptr<const quad::ContourEvaluator> shifted_;
    Estimate residue(double log_x) const;
};

// Iterated Mellin convolution of k+1 Fermi factors 1/(e^u+1) and m-k factors e^{-u},
// by nested trapezoids in logarithmic variables; m ≤ 2.
Estimate u_convolution(KernelOrder order, double x);

Estimate u_kernel(KernelOrder order, double x, UMethod method, const quad::ContourSpec& spec = {});

// ∫_0^∞ U_{k,m}(t) t^{s-1} dt by quadrature on the log line.
CEstimate u_moment_quadrature(KernelOrder order, cplx s, const quad::ContourSpec& spec = {}, double tol = 1e-10);

// ∫∫ t^{s-1} du dt / (u (e^{t/u}+1)(e^u+1)) by nested half-line quadrature.
Estimate factorization_integral(double s, double tol = 1e-11);

struct BesselIdentityReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    double tail_bound = 0.0;
    double lhs_error = 0.0;
    std::size_t N = 0;
    bool tail_dominant = false;
};

// (1/2)∫ du/(u(e^{x/u}+1)(e^u+1)) against Σ_{n≤N} d(n)[K0(2√(nx)) - 4K0(2√(2nx)) + 4K0(4√(nx))].
BesselIdentityReport bessel_series_identity(double x, std::size_t N);

// Bound on Σ_{n>N} d(n)|K0(a√n) - 4K0(√2 a√n) + 4K0(2a√n)|.
double bessel_series_tail(double a, std::size_t N);

// Smallest N whose tail bound for the Bessel series identity at x falls below tol.
std::size_t terms_for_tail(double x, double tol);

// Bounded test functions on ℝ with known breakpoints.
struct BoundedFunction {
    std::string name;
    std::function<double(double)> f;
    std::vector<double> breakpoints;
    double support_lo;  // -inf / +inf when unbounded
    double support_hi;
    bool is_zero() const { return name == "zero"; }
    BoundedFunction scaled(double alpha) const;
};

// zero, one, indicator:a,b, bump:a,b.
BoundedFunction parse_bounded(const std::string& text);

enum class ResidualMode { double_integral, single_kernel };

struct ResidualReport {
    double value = 0.0;
    double abs_error = 0.0;
    double window_lo = 0.0;
    double window_hi = 0.0;
    double edge_weight = 0.0;  // kernel weight at the window ends
};

// ∫∫ e^{-δu} f(u) dt du / ((e^{e^{x-u-t}}+1)(e^{e^t}+1)).
ResidualReport double_residual(const BoundedFunction& f, SalemParam delta, double x);
// ∫ e^{-δu} U_{k,m}(e^{x-u}) f(u) du.
ResidualReport kernel_residual(const BoundedFunction& f, SalemParam delta, double x, KernelOrder order,
                            const quad::ContourSpec& spec = {});

// ∫ e^{-δu} K0(2√n e^{(x-u)/2}) f(u) du.
Estimate meijer_convolution(std::size_t n, const BoundedFunction& f, SalemParam delta, double x);

struct CombinationReport {
    double value = 0.0;
    double abs_error = 0.0;
    double tail_bound = 0.0;
    std::size_t N = 0;
};

// Σ_{n≤N} d(n)[(K_n f) - 4(K_{2n} f) + 4(K_{4n} f)](x), N chosen from the support of f.
CombinationReport meijer_combination(const BoundedFunction& f, SalemParam delta, double x,
                                       std::size_t max_terms = 2'000'000);

// Location in u of the maximum of e^{-δu} K0(2√n e^{(x-u)/2}).
double meijer_peak(std::size_t n, SalemParam delta, double x);

// ∫ e^{δy} U_{k,m}(e^y) dy.
Estimate translation_weight_norm(KernelOrder order, SalemParam delta, const quad::ContourSpec& spec = {});

}  // namespace rmt::salem
