#pragma once

#include <limits>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rmt/quad.hpp"

namespace rmt::mellin {

// Open interval of abscissae on which the Mellin side is analytic and integrable.
struct Strip {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool contains(double c) const { return c > lo && c < hi; }
};

// A function on (0, ∞) held through its Mellin transform f*(s) on Re s = c0.
class MellinPair {
public:
    MellinPair(quad::ComplexFn f_star, double c0, std::string label, Strip strip);

    cplx f_star(cplx s) const { return (*f_)(s); }
    const quad::ComplexFn& evaluator() const { return *f_; }
    double c0() const { return c0_; }
    const std::string& label() const { return label_; }
    const Strip& strip() const { return strip_; }
    bool is_zero() const { return zero_; }

    MellinPair with_c0(double c) const;
    MellinPair scaled(cplx alpha) const;

    static MellinPair zero(double c0 = 2.0);

    friend MellinPair operator+(const MellinPair& a, const MellinPair& b);

private:
    std::shared_ptr<const quad::ComplexFn> f_;
    double c0_;
    std::string label_;
    Strip strip_;
    bool zero_ = false;
};

// f(x) = (1/2πi)∫ f*(s) x^{-s} ds along Re s = fp.c0(); spec supplies height and nodes.
CEstimate eval(const MellinPair& fp, double x, const quad::ContourSpec& spec, double tol = 1e-10);

// Reusable physical-side evaluator with cached contour samples.
class PhysicalFunction {
public:
    PhysicalFunction(const MellinPair& fp, const quad::ContourSpec& spec, double tol = 1e-10);
    Estimate operator()(double x) const;
    Estimate at_log(double log_x) const;
    const MellinPair& pair() const { return fp_; }

private:
    MellinPair fp_;
    std::shared_ptr<const quad::ContourEvaluator> ev_;
};

struct NormReport {
    double value = 0.0;
    double tail = 0.0;
    double abs_error = 0.0;
};

// (1/2π)∫ |f*(c0 + it)| dt, truncated at spec.height.
NormReport m_norm(const MellinPair& fp, const quad::ContourSpec& spec, double tol = 1e-10);

struct SpaceSpec {
    double c1 = 0.0;
    double c2 = 0.0;
    double c0 = 2.0;
    void validate() const;
};

enum class Verdict { member, inconclusive, diverges };
std::string to_string(Verdict v);

struct MembershipReport {
    double value = 0.0;
    Verdict verdict = Verdict::inconclusive;
    double tail_slope = 0.0;  // d log(integrand) / d log t over the last decade of heights
    double height = 0.0;
};

MembershipReport weighted_membership(const MellinPair& fp, const SpaceSpec& spec, const quad::ContourSpec& contour);

MellinPair mellin_convolution(const MellinPair& fp, const quad::ComplexFn& g_star, const std::string& label = "");

// Named pairs: exp, xexp, gauss2, klt_ref, zero, and user definitions
// read from key=value entries "pair.<name>.<field>".
class Registry {
public:
    Registry();
    void load(const std::map<std::string, std::string>& kv);
    MellinPair get(const std::string& name) const;
    std::vector<std::string> names() const;

private:
    std::map<std::string, MellinPair> pairs_;
};

// Closed-form physical side of the built-in pairs, for tests and reports.
double builtin_physical(const std::string& name, double x);

}  // namespace rmt::mellin
