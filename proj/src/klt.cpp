#include "rmt/klt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rmt/arith.hpp"
#include "rmt/parallel.hpp"
#include "rmt/specfun.hpp"

namespace rmt::klt {

using mellin::MellinPair;
using specfun::log_gamma;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_x(double x, const char* who) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError(std::string(who) + ": x must be positive");
}

// Γ((s+iτ)/2) Γ((s-iτ)/2) without intermediate overflow.
cplx gamma_pair(cplx s, double tau) {
    const cplx it(0.0, tau);
    return std::exp(log_gamma(0.5 * (s + it)) + log_gamma(0.5 * (s - it)));
}

quad::ContourSpec line_for(const quad::ContourSpec& spec, double c0, double height) {
    quad::ContourSpec s = spec;
    s.c0 = c0;
    if (height > s.height) {
        const double scale = height / s.height;
        s.nodes = static_cast<int>(std::ceil(s.nodes * scale / 32.0)) * 32;
        s.height = height;
    }
    return s;
}

KernelValue kernel_series(double tau, double x) {
    if (x < kMinKernelX)
        throw ConvergenceError("ml_kernel: series needs O(1/x) terms below x = 0.05; use the integral method");
    const auto order = specfun::BesselOrder::imaginary(tau);
    KernelValue kv;
    double sum = 0.0, err = 0.0;
    for (std::size_t n = 1;; ++n) {
        const Estimate k = specfun::bessel_k(order, double(n) * x);
        sum += k.value;
        err += k.abs_error;
        // |K_{iτ}(y)| ≤ K_0(y) ≤ √(π/2y) e^{-y}.
        const double m = double(n + 1) * x;
        const double tail = std::sqrt(kPi / (2.0 * m)) * std::exp(-m) / (-std::expm1(-x));
        if (tail <= 1e-17 * std::abs(sum) || tail < 1e-300) {
            kv.value = sum;
            kv.abs_error = err + tail + double(n) * kEps * std::abs(sum);
            kv.terms = n;
            return kv;
        }
        if (n > 1'000'000) throw ConvergenceError("ml_kernel: series did not converge");
    }
}

KernelValue kernel_contour(double tau, double x, const quad::ContourSpec& spec) {
    if (x < kMinKernelX)
        throw ConvergenceError("ml_kernel: contour form needs excessive height below x = 0.05; use the integral method");
    const auto line = line_for(spec, 2.0, tau + 40.0);
    auto g = [tau](cplx s) {
        return std::exp((s - 2.0) * kLn2) * gamma_pair(s, tau) * specfun::zeta(s);
    };
    const auto r = quad::integrate_contour(g, line, x, 1e-12);
    KernelValue kv;
    kv.value = r.value.real();
    kv.imag_residue = std::abs(r.value.imag());
    kv.abs_error = r.abs_error_estimate;
    kv.terms = static_cast<std::size_t>(r.evaluations);
    return kv;
}

// ∫_0^U cos(τu) du / (e^{x cosh u} - 1), U where the integrand has dropped by e^{-42}.
KernelValue kernel_integral(double tau, double x) {
    const double U = std::acosh(1.0 + 42.0 / x);
    const double width = std::min(0.5, 1.5 / std::max(tau, 1.0));
    int panels = static_cast<int>(std::ceil(U / width));
    panels += panels % 2;
    auto integrand = [tau, x](double u) { return std::cos(tau * u) / std::expm1(x * std::cosh(u)); };
    auto run = [&](int p) {
        const auto r = quad::gl_panels(0.0, U, p);
        double s = 0.0, m = 0.0;
        for (std::size_t j = 0; j < r.x.size(); ++j) {
            const double v = r.w[j] * integrand(r.x[j]);
            s += v;
            m += std::abs(v);
        }
        return std::pair{s, m};
    };
    const auto [fine, mass] = run(panels);
    const auto [coarse, unused] = run(panels / 2);
    (void)unused;
    KernelValue kv;
    kv.value = fine;
    // Dropped range: ∫_U^∞ ≤ e^{-x cosh U} / (x sinh U) up to the Bose factor.
    const double cut = std::exp(-x * std::cosh(U)) / (x * std::sinh(U) * (-std::expm1(-x * std::cosh(U))));
    kv.abs_error = std::abs(fine - coarse) + cut + 16.0 * panels * kEps * mass;
    kv.terms = static_cast<std::size_t>(panels) * 16;
    return kv;
}

}  // namespace

std::string to_string(KernelMethod m) {
    switch (m) {
        case KernelMethod::series: return "series";
        case KernelMethod::contour: return "contour";
        case KernelMethod::integral: return "integral";
    }
    return "?";
}

KernelMethod parse_kernel_method(const std::string& text) {
    if (text == "series") return KernelMethod::series;
    if (text == "contour") return KernelMethod::contour;
    if (text == "integral") return KernelMethod::integral;
    throw UsageError("unknown kernel method '" + text + "' (series|contour|integral)");
}

KernelValue ml_kernel(double tau, double x, KernelMethod method, const quad::ContourSpec& spec) {
    require_x(x, "ml_kernel");
    tau = std::abs(tau);
    switch (method) {
        case KernelMethod::series: return kernel_series(tau, x);
        case KernelMethod::contour: return kernel_contour(tau, x, spec);
        case KernelMethod::integral: return kernel_integral(tau, x);
    }
    return {};
}

KernelValue ml_kernel_auto(double tau, double x) {
    return ml_kernel(tau, x, x < kMinKernelX ? KernelMethod::integral : KernelMethod::series);
}

cplx ml_mellin_moment(double tau, cplx s) {
    if (!(s.real() > 1.0)) throw DomainError("ml_mellin_moment: Re s must exceed 1");
    if (std::abs(s - 1.0) < 1e-6) throw DomainError("ml_mellin_moment: too close to the pole at s = 1");
    tau = std::abs(tau);
    return std::exp((s - 2.0) * kLn2) * gamma_pair(s, tau) * specfun::zeta(s);
}

CEstimate ml_moment_quadrature(double tau, cplx s, double tol) {
    if (!(s.real() > 1.0)) throw DomainError("ml_moment_quadrature: Re s must exceed 1");
    auto g = [&](double x) -> cplx {
        if (x > 700.0) return 0.0;
        const auto k = ml_kernel_auto(tau, x);
        const cplx w = std::exp((s - 1.0) * std::log(x));
        return w * k.value;
    };
    const auto r = quad::integrate_halfline(g, tol);
    return {r.value, r.abs_error_estimate};
}

void KltTestFunction::validate(const quad::ContourSpec& spec) const {
    if (!(a > 1.0)) throw DomainError("KltTestFunction: a must exceed 1");
    if (std::abs(fp.c0() - (1.0 - a)) > 1e-12) throw DomainError("KltTestFunction: c0 must equal 1 - a");
    if (fp.is_zero()) return;
    if (!(fp.strip().lo < 1.0 - a) || !(fp.strip().hi > 1.0 + a))
        throw DomainError("KltTestFunction: Mellin side must be analytic on [1-a, 1+a]");
    if (std::abs(fp.f_star(0.0)) > 1e-12) throw DomainError("KltTestFunction: f*(0) must vanish");
    // Decay on both edges of the strip; m_norm raises on a divergent tail.
    for (double c : {1.0 - a, 1.0 + a}) (void)mellin::m_norm(fp.with_c0(c), spec, 1e-8);
}

KltTestFunction reference_test_function() {
    return {mellin::Registry().get("klt_ref"), 2.0};
}

ForwardContour::ForwardContour(const KltTestFunction& f, double height, int nodes)
    : a_(1.0 - f.fp.c0()), height_(height) {
    if (!(a_ > 1.0)) throw DomainError("ForwardContour: requires a > 1");
    if (f.fp.is_zero()) {
        zero_ = true;
        return;
    }
    int panels = std::max(2, nodes / 16);
    panels += panels % 2;
    auto build = [&](int p) {
        const auto r = quad::gl_panels(-height, height, p);
        Line l;
        l.t = r.x;
        l.base.resize(r.x.size());
        par::parallel_for(r.x.size(), [&](std::size_t j) {
            const cplx s(a_, r.x[j]);
            l.base[j] = r.w[j] * std::exp((s - 2.0) * kLn2) * specfun::zeta(s) * f.fp.f_star(1.0 - s) / (2.0 * kPi);
        });
        return l;
    };
    fine_ = build(panels);
    coarse_ = build(panels / 2);
}

cplx ForwardContour::sum(const Line& l, double tau) const {
    return par::ordered_sum<cplx>(l.t.size(), [&](std::size_t j) {
        return l.base[j] * gamma_pair(cplx(a_, l.t[j]), tau);
    });
}

Estimate ForwardContour::operator()(double tau) const {
    tau = std::abs(tau);
    if (zero_) return {};
    if (tau > height_ - 30.0)
        throw ConvergenceError("ForwardContour: height must exceed tau + 30");
    const cplx fv = sum(fine_, tau);
    const cplx cv = sum(coarse_, tau);
    // End magnitude with e^{-π|t|} decay beyond the cut.
    const cplx s(a_, height_);
    const double w = std::abs(std::exp((s - 2.0) * kLn2) * gamma_pair(s, tau));
    const double tail = 2.0 * w * 4.0 / (2.0 * kPi * kPi);
    return {fv.real(), std::abs(fv - cv) + std::abs(fv.imag()) + tail + 64.0 * kEps * std::abs(fv)};
}

ForwardReport klt_forward(const KltTestFunction& f, double tau, const quad::ContourSpec& spec, double tol) {
    f.validate(spec);
    ForwardReport rep;
    if (f.fp.is_zero()) return rep;
    const double h = std::max(spec.height, std::abs(tau) + 40.0);
    const ForwardContour fc(f, h, static_cast<int>(std::ceil(spec.nodes * h / spec.height / 32.0)) * 32);
    rep.contour = fc(tau);

    const mellin::PhysicalFunction phys(f.fp, spec, 1e-12);
    auto g = [&](double x) -> cplx {
        if (x > 700.0) return 0.0;
        const auto k = ml_kernel_auto(tau, x);
        const Estimate fx = phys(x);
        return {k.value * fx.value, std::abs(k.value) * fx.abs_error + k.abs_error * std::abs(fx.value)};
    };
    const auto r = quad::integrate_halfline(g, tol);
    rep.halfline = {r.value.real(), r.abs_error_estimate + std::abs(r.value.imag())};
    rep.difference = std::abs(rep.halfline.value - rep.contour.value);
    return rep;
}

CompositionReport composition_check(const KltTestFunction& f, double tau, std::size_t N, const quad::ContourSpec& spec,
                         double tol) {
    if (N == 0) throw DomainError("composition_check: N must be positive");
    f.validate(spec);
    CompositionReport rep;
    rep.N = N;
    if (f.fp.is_zero()) return rep;
    const double h = std::max(spec.height, std::abs(tau) + 40.0);
    const ForwardContour fc(f, h, static_cast<int>(std::ceil(spec.nodes * h / spec.height / 32.0)) * 32);
    rep.ml_transform = fc(tau);

    // g_N(x) = Σ_{n≤N} f(x/n)/n has Mellin side f*(w) Σ_{n≤N} n^{w-1}.
    std::vector<double> logn(N);
    for (std::size_t n = 1; n <= N; ++n) logn[n - 1] = std::log(double(n));
    auto fs = f.fp.evaluator();
    auto gstar = [fs, logn](cplx w) {
        cplx z(0.0, 0.0);
        for (double l : logn) z += std::exp((w - 1.0) * l);
        return fs(w) * z;
    };
    const MellinPair gN(gstar, f.fp.c0(), "composition_g", f.fp.strip());
    const mellin::PhysicalFunction g(gN, spec, 1e-12);
    auto integrand = [&](double x) -> cplx {
        if (x > 700.0) return 0.0;
        const Estimate k = specfun::bessel_k(specfun::BesselOrder::imaginary(std::abs(tau)), x);
        const Estimate gx = g(x);
        return {k.value * gx.value, std::abs(k.value) * gx.abs_error + k.abs_error * std::abs(gx.value)};
    };
    const auto r = quad::integrate_halfline(integrand, tol);
    rep.kl_transform = {r.value.real(), r.abs_error_estimate + std::abs(r.value.imag())};

    // |g - g_N|(x) ≤ ||f||_c x^{-c} N^c/(-c) for c < 0, and ∫ K_0(x) x^{-c} dx = 2^{-c-1} Γ((1-c)/2)².
    const double c = std::min(f.fp.strip().lo + 0.5, -0.5);
    const auto nr = mellin::m_norm(f.fp.with_c0(c), spec, 1e-8);
    const double mom = std::exp((-c - 1.0) * kLn2) * std::pow(std::tgamma(0.5 * (1.0 - c)), 2);
    rep.series_tail = (nr.value + nr.abs_error) * std::exp(c * std::log(double(N))) / (-c) * mom;
    rep.difference = std::abs(rep.ml_transform.value - rep.kl_transform.value);
    return rep;
}

double inversion_term(double tau, double y) {
    require_x(y, "inversion_term");
    if (!(tau > 0.0)) throw DomainError("inversion kernel: τ = 0 is singular");
    const double z = 1.0 + 8.0 * kPi * kPi / (y * y);
    const double pref = std::pow(2.0, 1.5) / (std::sqrt(y) * tau * std::sinh(0.5 * kPi * tau));
    return pref * std::pow(1.0 + 4.0 * kPi * kPi / (y * y), 0.25) * specfun::legendre_p_half(tau, z).real();
}

namespace {

// α_n with cosh α_n = 1 + 8π²/(x n)², via sinh(α/2) = 2π/(x n) to keep precision for large n.
double alpha_n(double x, std::size_t n) { return 2.0 * std::asinh(2.0 * kPi / (x * double(n))); }

// Σ_{n≤N} μ(n) (cos(τα_n/2) - 1)/n with the cosine difference as -2 sin²(τα_n/4).
double mobius_cos_sum(const std::vector<std::pair<double, double>>& terms, double tau) {
    double s = 0.0;
    for (const auto& [c, al] : terms) {
        const double q = std::sin(0.25 * tau * al);
        s += -2.0 * c * q * q;
    }
    return s;
}

std::vector<std::pair<double, double>> mobius_terms(double x, std::size_t N) {
    const auto mu = arith::build_table(arith::Fn::mu, N);
    std::vector<std::pair<double, double>> t;
    for (std::size_t n = 1; n <= N; ++n) {
        const auto m = mu.integer(n);
        if (m != 0) t.emplace_back(double(m) / double(n), alpha_n(x, n));
    }
    return t;
}

}  // namespace

InversionKernelValue inversion_kernel(double tau, double x, std::size_t N, KernelForm form) {
    require_x(x, "inversion_kernel");
    if (!(tau > 0.0)) throw DomainError("inversion kernel: τ = 0 is singular");
    if (N == 0) throw DomainError("inversion_kernel: N must be positive");
    const double pref = 2.0 / (kPi * tau * std::sinh(0.5 * kPi * tau));
    InversionKernelValue kv;
    kv.N = N;
    // 1 - cos(τα/2) ≤ τ²α²/8 and α ≤ 4π/(xn), so the n-th term is at most 2π²τ²/(x n)³·x.
    const double acc_tail = pref * kPi * kPi * tau * tau / (x * x * double(N) * double(N));
    if (form == KernelForm::accelerated) {
        kv.value = pref * mobius_cos_sum(mobius_terms(x, N), tau);
        kv.tail = acc_tail;
        return kv;
    }
    const auto mu = arith::build_table(arith::Fn::mu, N);
    double s = 0.0, m1 = 0.0;
    for (std::size_t n = 1; n <= N; ++n) {
        const auto m = mu.integer(n);
        if (m == 0) continue;
        s += double(m) / double(n) * inversion_term(tau, x * double(n));
        m1 += double(m) / double(n);
    }
    kv.value = s;
    // Literal partial sums carry the constant pref·Σ_{n≤N} μ(n)/n, whose full sum is zero.
    kv.tail = acc_tail + pref * std::abs(m1);
    return kv;
}

InversionReport klt_invert(const std::function<double(double)>& Mf, double x, double tau_max, std::size_t N,
                           double tol) {
    require_x(x, "klt_invert");
    if (!(tau_max > 0.0)) throw DomainError("klt_invert: tau_max must be positive");
    const auto terms = mobius_terms(x, N);
    // τ sinh(πτ) times the kernel prefactor is (4/π) cosh(πτ/2): no singularity at τ = 0.
    auto integrand = [&](double tau) {
        return 4.0 / kPi * std::cosh(0.5 * kPi * tau) * mobius_cos_sum(terms, tau) * Mf(tau);
    };
    int panels = static_cast<int>(std::ceil(tau_max / 0.5));
    panels += panels % 2;
    auto run = [&](int p, double* end) {
        const auto r = quad::gl_panels(0.0, tau_max, p);
        std::vector<double> v(r.x.size());
        par::parallel_for(v.size(), [&](std::size_t j) { v[j] = integrand(r.x[j]); });
        if (end) {
            *end = 0.0;
            for (std::size_t j = v.size() - 16; j < v.size(); ++j) *end = std::max(*end, std::abs(v[j]));
        }
        return par::ordered_sum<double>(v.size(), [&](std::size_t j) { return r.w[j] * v[j]; });
    };
    InversionReport rep;
    rep.value = run(panels, &rep.end_integrand);
    rep.abs_error = std::abs(rep.value - run(panels / 2, nullptr));
    rep.tail_dominant = rep.end_integrand > tol;
    rep.tau_nodes = panels * 16;
    return rep;
}

CosineStepReport cosine_step(const KltTestFunction& f, double u, double tau_max, const quad::ContourSpec& spec) {
    f.validate(spec);
    CosineStepReport rep;
    if (f.fp.is_zero()) return rep;
    const double h = tau_max + 40.0;
    const ForwardContour fc(f, h, static_cast<int>(std::ceil(spec.nodes * h / spec.height / 32.0)) * 32);
    int panels = static_cast<int>(std::ceil(tau_max / 0.5));
    panels += panels % 2;
    auto run = [&](int p, double* err) {
        const auto r = quad::gl_panels(0.0, tau_max, p);
        std::vector<Estimate> v(r.x.size());
        par::parallel_for(v.size(), [&](std::size_t j) { v[j] = fc(r.x[j]); });
        double e = 0.0;
        const double s = par::ordered_sum<double>(v.size(), [&](std::size_t j) {
            return r.w[j] * v[j].value * std::cos(r.x[j] * u);
        });
        for (std::size_t j = 0; j < v.size(); ++j) e += r.w[j] * v[j].abs_error;
        if (err) *err = e;
        return 2.0 / kPi * s;
    };
    double qerr = 0.0;
    rep.lhs = run(panels, &qerr);
    const double coarse = run(panels / 2, nullptr);
    // Dropped τ-range: |M_{iτ}[f]| at the end times the e^{-πτ/2} envelope length.
    const double end = std::abs(fc(tau_max).value) * 2.0 / kPi;

    const mellin::PhysicalFunction phys(f.fp, spec, 1e-12);
    const double ch = std::cosh(u);
    auto g = [&](double x) -> cplx {
        const double r = x * ch;
        if (r > 700.0) return 0.0;
        const Estimate fx = phys(x);
        const double k = 1.0 / std::expm1(r);
        return {fx.value * k, fx.abs_error * k};
    };
    const auto r = quad::integrate_halfline(g, 1e-10);
    rep.rhs = r.value.real();
    rep.difference = std::abs(rep.lhs - rep.rhs);
    rep.abs_error = std::abs(rep.lhs - coarse) + 2.0 / kPi * (qerr + end) + r.abs_error_estimate + std::abs(r.value.imag());
    return rep;
}

}  // namespace rmt::klt
