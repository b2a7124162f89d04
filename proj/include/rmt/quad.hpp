#pragma once

#include <functional>
#include <vector>

#include "rmt/core.hpp"

namespace rmt::quad {

enum class ContourRule { uniform, gauss_legendre_panels };

// The line Re s = c0 truncated to |Im s| ≤ height.
struct ContourSpec {
    double c0 = 2.0;
    double height = 60.0;
    int nodes = 1920;
    ContourRule rule = ContourRule::gauss_legendre_panels;

    void validate() const;
};

struct QuadResult {
    cplx value{0.0, 0.0};
    double abs_error_estimate = 0.0;
    long evaluations = 0;
};

using ComplexFn = std::function<cplx(cplx)>;

struct NodeRule {
    std::vector<double> x;
    std::vector<double> w;
};

// n-point Gauss-Legendre rule on [-1, 1]; cached per n.
const NodeRule& gauss_legendre(int n);

// Panels of 16-point Gauss-Legendre covering [lo, hi].
NodeRule gl_panels(double lo, double hi, int panels, int order = 16);

// Nodes in t = Im s for a contour, with a coarser companion rule for error estimation.
struct LineGrid {
    NodeRule fine;
    NodeRule coarse;
    explicit LineGrid(const ContourSpec& spec);
};

// Caches f*(c0 + i t_j) on a LineGrid, so many physical-side values
// (1/2πi)∫ f*(s) x^{-s} ds cost one complex exponential per node.
class ContourEvaluator {
public:
    ContourEvaluator(const ComplexFn& f_star, const ContourSpec& spec, double tail_tol = 1e-10);

    QuadResult eval(double x) const;
    QuadResult eval_log(double log_x) const;
    const ContourSpec& spec() const { return spec_; }

private:
    struct Samples {
        std::vector<double> t;
        std::vector<cplx> wf;  // w_j f*(c0 + i t_j) / 2π
    };
    ContourSpec spec_;
    double tail_tol_;
    Samples fine_;
    Samples coarse_;
    // |f*| near both ends of the line, for the truncation tail.
    double end_mag_ = 0.0;
    double decay_rate_ = 0.0;

    cplx sum(const Samples& smp, double log_x, double* abs_sum) const;
};

QuadResult integrate_contour(const ComplexFn& f_star, const ContourSpec& spec, double x, double tail_tol = 1e-10);

inline constexpr long kMaxEvaluations = 1L << 20;

// ∫_0^∞ g(t) dt by the exp-sinh rule with step halving.
QuadResult integrate_halfline(const std::function<cplx(double)>& g, double tol = 1e-10,
                              long max_evals = kMaxEvaluations);

// ∫_a^b g(x) dx by the tanh-sinh rule; endpoint singularities allowed.
QuadResult integrate_finite(const std::function<cplx(double)>& g, double a, double b, double tol = 1e-10,
                            long max_evals = kMaxEvaluations);

// ∫_{-∞}^{∞} g(v) dv by the sinh-sinh rule, for smooth integrands decaying at both ends.
QuadResult integrate_line(const std::function<cplx(double)>& g, double tol = 1e-10,
                          long max_evals = kMaxEvaluations);

// Trapezoid over [lo, hi] with step ≤ h for integrands negligible at both ends;
// error estimate from the half-resolution sum.
QuadResult integrate_window(const std::function<double(double)>& g, double lo, double hi, double h);

}  // namespace rmt::quad
