#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rmt/mellin.hpp"
#include "rmt/quad.hpp"

namespace rmt::klt {

// Below this argument the series and contour kernels are refused.
inline constexpr double kMinKernelX = 0.05;

enum class KernelMethod { series, contour, integral };
std::string to_string(KernelMethod m);
KernelMethod parse_kernel_method(const std::string& text);

struct KernelValue {
    double value = 0.0;
    double abs_error = 0.0;
    double imag_residue = 0.0;  // contour method only
    std::size_t terms = 0;
};

// M_{iτ}(x) = Σ_n K_{iτ}(nx) = ∫_0^∞ cos(τu) du / (e^{x cosh u} - 1); τ enters through |τ|.
KernelValue ml_kernel(double tau, double x, KernelMethod method, const quad::ContourSpec& spec = {});

// Integral form below kMinKernelX, series above.
KernelValue ml_kernel_auto(double tau, double x);

// 2^{s-2} Γ((s+iτ)/2) Γ((s-iτ)/2) ζ(s), Re s > 1.
cplx ml_mellin_moment(double tau, cplx s);

// ∫_0^∞ M_{iτ}(x) x^{s-1} dx by half-line quadrature.
CEstimate ml_moment_quadrature(double tau, cplx s, double tol = 1e-9);

// f with Mellin side analytic on [1-a, 1+a], held on Re s = c0 = 1 - a, f*(0) = 0.
struct KltTestFunction {
    mellin::MellinPair fp;
    double a;
    void validate(const quad::ContourSpec& spec = {}) const;
};

// f*(s) = s 2^{-s} Γ(s+3), a = 2.
KltTestFunction reference_test_function();

// M_{iτ}[f] = (1/2πi)∫_{Re s=a} 2^{s-2}Γ((s+iτ)/2)Γ((s-iτ)/2)ζ(s) f*(1-s) ds for many τ.
// τ-independent factors are cached on the line; valid for τ ≤ height - 30.
class ForwardContour {
public:
    ForwardContour(const KltTestFunction& f, double height, int nodes);
    Estimate operator()(double tau) const;
    double height() const { return height_; }

private:
    double a_;
    double height_;
    struct Line {
        std::vector<double> t;
        std::vector<cplx> base;  // w 2^{s-2} ζ(s) f*(1-s) / 2π
    };
    Line fine_, coarse_;
    bool zero_ = false;
    cplx sum(const Line& l, double tau) const;
};

struct ForwardReport {
    Estimate halfline;  // ∫ M_{iτ}(x) f(x) dx
    Estimate contour;
    double difference = 0.0;
};

ForwardReport klt_forward(const KltTestFunction& f, double tau, const quad::ContourSpec& spec = {},
                          double tol = 1e-9);

// M_{iτ}[f] against K_{iτ}[g] with g = Σ_{n≤N} f(x/n)/n.
struct CompositionReport {
    Estimate ml_transform;
    Estimate kl_transform;
    double series_tail = 0.0;  // bound on ∫|K_{iτ}| |g - g_N|
    double difference = 0.0;
    std::size_t N = 0;
};

CompositionReport composition_check(const KltTestFunction& f, double tau, std::size_t N = 1000,
                         const quad::ContourSpec& spec = {}, double tol = 1e-9);

enum class KernelForm { accelerated, literal };

struct InversionKernelValue {
    double value = 0.0;
    double tail = 0.0;
    std::size_t N = 0;
};

// Inversion kernel as a Möbius series over n ≤ N. The accelerated form subtracts the
// n-independent constant of each term, which sums to zero against μ(n)/n.
InversionKernelValue inversion_kernel(double tau, double x, std::size_t N,
                                      KernelForm form = KernelForm::accelerated);

// Single series term in closed Legendre form, argument 1 + 8π²/y².
double inversion_term(double tau, double y);

struct InversionReport {
    double value = 0.0;  // ≈ x f(x)
    double abs_error = 0.0;
    double end_integrand = 0.0;  // |integrand| near tau_max
    bool tail_dominant = false;
    int tau_nodes = 0;
};

InversionReport klt_invert(const std::function<double(double)>& Mf, double x, double tau_max = 12.0,
                           std::size_t N = 1000, double tol = 1e-6);

// (2/π)∫ M_{iτ}[f] cos(τu) dτ against ∫ f(x) dx / (e^{x cosh u} - 1).
struct CosineStepReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double difference = 0.0;
    double abs_error = 0.0;
};

CosineStepReport cosine_step(const KltTestFunction& f, double u, double tau_max = 24.0,
                             const quad::ContourSpec& spec = {});

}  // namespace rmt::klt
