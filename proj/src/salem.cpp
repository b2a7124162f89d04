#include "rmt/salem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rmt/arith.hpp"
#include "rmt/parallel.hpp"
#include "rmt/specfun.hpp"

namespace rmt::salem {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();

double fermi(double y) { return y > 745.0 ? 0.0 : 1.0 / (std::exp(y) + 1.0); }

cplx mellin_side(KernelOrder o, cplx s) {
    const cplx e = specfun::eta(s);
    const cplx g = specfun::gamma(s);
    cplx v(1.0, 0.0);
    for (int j = 0; j <= o.k; ++j) v *= e;
    for (int j = 0; j <= o.m; ++j) v *= g;
    return v;
}

// Gauss-Legendre panels of width ≤ w on [lo, hi], split at interior breakpoints;
// error from the same split with half as many panels per piece.
template <class G>
Estimate panel_integrate(const G& g, double lo, double hi, const std::vector<double>& breaks, double w) {
    if (!(hi > lo)) return {};
    std::vector<double> cuts{lo};
    for (double b : breaks)
        if (b > lo && b < hi) cuts.push_back(b);
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> xs, wf, wc;
    std::vector<double> xc;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        int p = std::max(2, static_cast<int>(std::ceil((cuts[i + 1] - cuts[i]) / w)));
        p += p % 2;
        const auto f = quad::gl_panels(cuts[i], cuts[i + 1], p);
        const auto c = quad::gl_panels(cuts[i], cuts[i + 1], p / 2);
        xs.insert(xs.end(), f.x.begin(), f.x.end());
        wf.insert(wf.end(), f.w.begin(), f.w.end());
        xc.insert(xc.end(), c.x.begin(), c.x.end());
        wc.insert(wc.end(), c.w.begin(), c.w.end());
    }
    std::vector<double> vf(xs.size()), vc(xc.size());
    par::parallel_for(xs.size(), [&](std::size_t j) { vf[j] = g(xs[j]); });
    par::parallel_for(xc.size(), [&](std::size_t j) { vc[j] = g(xc[j]); });
    const double fine = par::ordered_sum<double>(xs.size(), [&](std::size_t j) { return wf[j] * vf[j]; });
    const double coarse = par::ordered_sum<double>(xc.size(), [&](std::size_t j) { return wc[j] * vc[j]; });
    const double mass = par::ordered_sum<double>(xs.size(), [&](std::size_t j) { return std::abs(wf[j] * vf[j]); });
    return {fine, std::abs(fine - coarse) + 64.0 * kEps * mass};
}

}  // namespace

void KernelOrder::validate() const {
    if (k < 0 || m < 0) throw DomainError("KernelOrder: k and m must be nonnegative");
    if (k > m) throw DomainError("KernelOrder: k > m lies outside the supported family");
    if (m > 3) throw UsageError("KernelOrder: orders are capped at m = 3");
}

void SalemParam::validate() const {
    if (!(delta > 0.5 && delta < 1.0)) throw DomainError("SalemParam: delta must lie in (1/2, 1)");
}

std::string to_string(UMethod m) { return m == UMethod::contour ? "contour" : "convolution"; }

UMethod parse_u_method(const std::string& text) {
    if (text == "contour") return UMethod::contour;
    if (text == "convolution") return UMethod::convolution;
    throw UsageError("unknown kernel method '" + text + "' (contour|convolution)");
}

cplx u_mellin_moment(KernelOrder order, cplx s) {
    order.validate();
    if (!(s.real() > 0.0)) throw DomainError("u_mellin_moment: Re s must be positive");
    return mellin_side(order, s);
}

UKernel::UKernel(KernelOrder order, const quad::ContourSpec& spec, double c0) : order_(order) {
    order.validate();
    if (!(c0 > 0.0)) throw DomainError("UKernel: c0 must be positive");
    auto f = [order](cplx s) { return mellin_side(order, s); };
    quad::ContourSpec a = spec, b = spec;
    a.c0 = c0;
    b.c0 = -0.5;
    direct_ = std::make_shared<const quad::ContourEvaluator>(f, a, 1e-12);
    shifted_ = std::make_shared<const quad::ContourEvaluator>(f, b, 1e-12);
}

Estimate UKernel::residue(double L) const {
    // Radius ~ 1/|L| keeps |x^{-s}| = e^{-L Re s} of order e on the circle.
    const double r = std::min(0.4, 1.0 / std::max(std::abs(L), 1e-300));
    constexpr int M = 64;
    cplx acc(0.0, 0.0);
    double mass = 0.0;
    for (int j = 0; j < M; ++j) {
        const double th = 2.0 * kPi * (j + 0.5) / M;
        const cplx s = r * cplx(std::cos(th), std::sin(th));
        const cplx v = mellin_side(order_, s) * std::exp(-s * L) * s;
        acc += v;
        mass += std::abs(v);
    }
    acc /= double(M);
    // Trapezoid on a circle converges like (r/R)^M, R = 1 being the next pole.
    const double geo = std::pow(r, M) * mass / M * 4.0;
    return {acc.real(), geo + std::abs(acc.imag()) + 16.0 * kEps * mass / M};
}

Estimate UKernel::at_log(double L) const {
    require_finite(L, "UKernel");
    if (L >= -2.0) {
        const auto q = direct_->eval_log(L);
        return {q.value.real(), q.abs_error_estimate + std::abs(q.value.imag())};
    }
    const Estimate res = residue(L);
    const auto q = shifted_->eval_log(L);
    return {res.value + q.value.real(), res.abs_error + q.abs_error_estimate + std::abs(q.value.imag())};
}

Estimate UKernel::operator()(double x) const {
    if (!(x > 0.0)) throw DomainError("u_kernel: x must be positive");
    return at_log(std::log(x));
}

namespace {

// Factor list for the iterated convolution: true = Fermi, false = exponential.
std::vector<bool> factor_list(KernelOrder o) {
    std::vector<bool> f(o.k + 1, true);
    f.insert(f.end(), o.m - o.k, false);
    return f;
}

double factor(bool is_fermi, double y) { return is_fermi ? fermi(y) : (y > 745.0 ? 0.0 : std::exp(-y)); }

// C_j(y) = ∫ φ_j(e^v) C_{j+1}(y e^{-v}) dv, innermost C_last = φ_last.
double convolve(const std::vector<bool>& f, std::size_t j, double log_y, double h) {
    if (j + 1 == f.size()) return factor(f[j], std::exp(log_y));
    const double r = double(f.size() - j - 1);
    // Inner factor product drops below e^{-45} once y e^{-v} > (45/r)^r e².
    const double lo = log_y - r * std::log(45.0 / r) - 2.0;
    const double hi = std::log(45.0) + 1.0;
    if (!(hi > lo)) return 0.0;
    const int n = static_cast<int>(std::ceil((hi - lo) / h));
    const double step = (hi - lo) / n;
    double s = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double v = lo + i * step;
        const double w = (i == 0 || i == n) ? 0.5 : 1.0;
        const double a = factor(f[j], std::exp(v));
        if (a == 0.0) continue;
        s += w * a * convolve(f, j + 1, log_y - v, h);
    }
    return s * step;
}

}  // namespace

Estimate u_convolution(KernelOrder order, double x) {
    order.validate();
    if (order.m > 2) throw UsageError("u_convolution: dimension cap m ≤ 2 exceeded");
    if (!(x > 0.0)) throw DomainError("u_kernel: x must be positive");
    const auto f = factor_list(order);
    const double L = std::log(x);
    const double fine = convolve(f, 0, L, 0.125);
    const double coarse = convolve(f, 0, L, 0.25);
    return {fine, std::abs(fine - coarse) + 1e3 * kEps * std::abs(fine)};
}

Estimate u_kernel(KernelOrder order, double x, UMethod method, const quad::ContourSpec& spec) {
    if (method == UMethod::convolution) return u_convolution(order, x);
    return UKernel(order, spec)(x);
}

CEstimate u_moment_quadrature(KernelOrder order, cplx s, const quad::ContourSpec& spec, double tol) {
    if (!(s.real() > 0.0)) throw DomainError("u_moment_quadrature: Re s must be positive");
    const UKernel U(order, spec);
    auto g = [&](double y) -> cplx {
        // U grows only polynomially in |y| as y → -∞.
        if (s.real() * y < -745.0) return 0.0;
        if (y > 8.0 + 2.0 * std::log(double(order.m + 1))) {
            // U decays like exp(-(m+1) e^{y/(m+1)}); beyond this point it is below e^{-50}.
            if ((order.m + 1) * std::exp(y / (order.m + 1)) > 60.0) return 0.0;
        }
        const Estimate u = U.at_log(y);
        return std::exp(s * y) * u.value;
    };
    const auto r = quad::integrate_line(g, tol);
    return {r.value, r.abs_error_estimate};
}

Estimate factorization_integral(double s, double tol) {
    if (!(s > 0.0)) throw DomainError("factorization_integral: s must be positive");
    auto inner = [tol](double t) {
        auto g = [t](double u) -> cplx {
            if (!(u > 0.0)) return 0.0;
            return fermi(t / u) * fermi(u) / u;
        };
        return quad::integrate_halfline(g, tol * 0.1);
    };
    auto outer = [&](double t) -> cplx {
        // Inner integral is ≤ 1 + ln(1/t)/2 below t = 1 and ≤ e^{-2√t} above; both ends are negligible here.
        if (t < 1e-22 || t > 1e5) return 0.0;
        const auto r = inner(t);
        return {std::pow(t, s - 1.0) * r.value.real(), std::pow(t, s - 1.0) * r.abs_error_estimate};
    };
    const auto r = quad::integrate_halfline(outer, tol);
    return {r.value.real(), r.abs_error_estimate + std::abs(r.value.imag())};
}

double bessel_series_tail(double a, std::size_t N) {
    // d(n) ≤ √(3n), |bracket| ≤ 9 K0(a√n) ≤ 9 √(π/(2a√n)) e^{-a√n}; the majorant
    // t^{1/4} e^{-a√t} decreases once a√t > 1/2, so the sum is below its integral from N.
    auto B = [a](double t) { return 9.0 * std::sqrt(3.0 * t) * std::sqrt(kPi / (2.0 * a * std::sqrt(t))) * std::exp(-a * std::sqrt(t)); };
    const double n0 = std::max<double>(double(N), 1.0);
    if (a * std::sqrt(n0) < 0.5) return kInf;
    const auto r = quad::integrate_halfline([&](double t) -> cplx { return B(n0 + t); }, 1e-6);
    return r.value.real() * (1.0 + 1e-5) + r.abs_error_estimate;
}

std::size_t terms_for_tail(double x, double tol) {
    if (!(x > 0.0)) throw DomainError("terms_for_tail: x must be positive");
    const double a = 2.0 * std::sqrt(x);
    std::size_t N = 1;
    while (bessel_series_tail(a, N) > tol) {
        N = N < 16 ? N + 1 : N + N / 16;
        if (N > 100'000'000) throw ConvergenceError("terms_for_tail: tolerance unreachable");
    }
    // Refine downward to the smallest N.
    while (N > 1 && bessel_series_tail(a, N - 1) <= tol) --N;
    return N;
}

BesselIdentityReport bessel_series_identity(double x, std::size_t N) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("bessel_series_identity: x must be positive");
    if (N == 0) throw DomainError("bessel_series_identity: N must be positive");
    BesselIdentityReport rep;
    rep.N = N;
    auto g = [x](double u) -> cplx {
        if (!(u > 0.0)) return 0.0;
        return fermi(x / u) * fermi(u) / u;
    };
    const auto l = quad::integrate_halfline(g, 1e-13);
    rep.lhs = 0.5 * l.value.real();
    rep.lhs_error = 0.5 * l.abs_error_estimate;

    const auto d = arith::build_table(arith::Fn::d, N);
    const double sx = std::sqrt(x);
    rep.rhs = par::ordered_sum<double>(N, [&](std::size_t i) {
        const double n = double(i + 1), r = std::sqrt(n);
        return double(d.integer(i + 1)) *
               (specfun::bessel_k0(2.0 * r * sx) - 4.0 * specfun::bessel_k0(2.0 * std::sqrt(2.0) * r * sx) +
                4.0 * specfun::bessel_k0(4.0 * r * sx));
    });
    rep.tail_bound = bessel_series_tail(2.0 * sx, N);
    rep.residual = std::abs(rep.lhs - rep.rhs);
    rep.tail_dominant = x < 0.1 || rep.tail_bound > 1e-8;
    return rep;
}

BoundedFunction BoundedFunction::scaled(double alpha) const {
    BoundedFunction b = *this;
    auto g = f;
    b.f = [g, alpha](double u) { return alpha * g(u); };
    b.name = name + "*" + std::to_string(alpha);
    if (alpha == 0.0) b.name = "zero";
    return b;
}

BoundedFunction parse_bounded(const std::string& text) {
    if (text == "zero") return {"zero", [](double) { return 0.0; }, {}, 0.0, 0.0};
    if (text == "one") return {"one", [](double) { return 1.0; }, {}, -kInf, kInf};
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    if ((head == "indicator" || head == "bump") && colon != std::string::npos) {
        const std::string args = text.substr(colon + 1);
        const auto comma = args.find(',');
        if (comma == std::string::npos) throw UsageError("bounded function '" + text + "': expected name:a,b");
        double a, b;
        try {
            a = std::stod(args.substr(0, comma));
            b = std::stod(args.substr(comma + 1));
        } catch (const std::logic_error&) {
            throw UsageError("bounded function '" + text + "': bad endpoints");
        }
        if (!(b > a)) throw DomainError("bounded function: need a < b");
        if (head == "indicator")
            return {text, [a, b](double u) { return (u >= a && u <= b) ? 1.0 : 0.0; }, {a, b}, a, b};
        const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
        return {text,
                [c, hw](double u) {
                    const double z = (u - c) / hw;
                    return std::abs(z) < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - z * z)) : 0.0;
                },
                {a, b}, a, b};
    }
    throw UsageError("unknown bounded function '" + text + "' (zero|one|indicator:a,b|bump:a,b)");
}

namespace {

// V(y) = ∫ dt / ((e^{y e^{-t}}+1)(e^{e^t}+1)) by trapezoid in t.
double v_trapezoid(double log_y, double h) {
    const double lo = log_y - std::log(45.0) - 1.0, hi = std::log(45.0) + 1.0;
    if (!(hi > lo)) return 0.0;
    const int n = static_cast<int>(std::ceil((hi - lo) / h));
    const double step = (hi - lo) / n;
    double s = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double t = lo + i * step;
        const double w = (i == 0 || i == n) ? 0.5 : 1.0;
        s += w * fermi(std::exp(log_y - t)) * fermi(std::exp(t));
    }
    return s * step;
}

// Effective u-window for a kernel decaying double-exponentially as u → -∞ (below x - left)
// and like e^{-δu}·poly(u) as u → +∞.
std::pair<double, double> window(const BoundedFunction& f, double x, double left, double delta) {
    double lo = x - left, hi = x + 36.0 / delta;
    lo = std::max(lo, f.support_lo);
    hi = std::min(hi, f.support_hi);
    return {lo, hi};
}

}  // namespace

ResidualReport double_residual(const BoundedFunction& f, SalemParam delta, double x) {
    delta.validate();
    require_finite(x, "double_residual");
    ResidualReport rep;
    if (f.is_zero()) return rep;
    const auto [lo, hi] = window(f, x, 10.0, delta.delta);
    rep.window_lo = lo;
    rep.window_hi = hi;
    if (!(hi > lo)) return rep;
    const double d = delta.delta;
    auto g = [&](double u) { return std::exp(-d * u) * f.f(u) * v_trapezoid(x - u, 0.125); };
    const auto r = panel_integrate(g, lo, hi, f.breakpoints, 0.5);
    // Inner trapezoid error from the step-doubled rule at the window centre.
    const double um = 0.5 * (lo + hi);
    const double inner = std::abs(v_trapezoid(x - um, 0.125) - v_trapezoid(x - um, 0.25));
    rep.value = r.value;
    rep.abs_error = r.abs_error + inner * std::abs(r.value);
    rep.edge_weight = std::max(std::abs(std::exp(-d * lo) * v_trapezoid(x - lo, 0.125)),
                               std::abs(std::exp(-d * hi) * v_trapezoid(x - hi, 0.125)));
    return rep;
}

ResidualReport kernel_residual(const BoundedFunction& f, SalemParam delta, double x, KernelOrder order,
                            const quad::ContourSpec& spec) {
    delta.validate();
    order.validate();
    require_finite(x, "kernel_residual");
    ResidualReport rep;
    if (f.is_zero()) return rep;
    const double r = order.m + 1;
    const auto [lo, hi] = window(f, x, r * std::log(45.0 / r) + 2.0, delta.delta);
    rep.window_lo = lo;
    rep.window_hi = hi;
    if (!(hi > lo)) return rep;
    const UKernel U(order, spec);
    const double d = delta.delta;
    auto g = [&](double u) { return std::exp(-d * u) * f.f(u) * U.at_log(x - u).value; };
    const auto q = panel_integrate(g, lo, hi, f.breakpoints, 0.5);
    // Kernel error propagated through the weight integral.
    auto ge = [&](double u) { return std::exp(-d * u) * std::abs(f.f(u)) * U.at_log(x - u).abs_error; };
    const auto e = panel_integrate(ge, lo, hi, f.breakpoints, 1.0);
    rep.value = q.value;
    rep.abs_error = q.abs_error + std::abs(e.value);
    rep.edge_weight = std::max(std::abs(std::exp(-d * lo) * U.at_log(x - lo).value),
                               std::abs(std::exp(-d * hi) * U.at_log(x - hi).value));
    return rep;
}

Estimate meijer_convolution(std::size_t n, const BoundedFunction& f, SalemParam delta, double x) {
    delta.validate();
    if (n == 0) throw DomainError("meijer_convolution: n must be positive");
    if (f.is_zero()) return {};
    const double ln_n = std::log(double(n));
    // K0(2√n e^{(x-u)/2}) < e^{-45} once the argument exceeds 46.
    const double left = 2.0 * std::log(23.0) - ln_n;
    const auto [lo, hi] = window(f, x, left, delta.delta);
    const double d = delta.delta;
    auto g = [&](double u) {
        const double arg = 2.0 * std::exp(0.5 * (ln_n + x - u));
        return std::exp(-d * u) * f.f(u) * specfun::bessel_k0(arg);
    };
    return panel_integrate(g, lo, std::max(lo, hi), f.breakpoints, 0.5);
}

CombinationReport meijer_combination(const BoundedFunction& f, SalemParam delta, double x, std::size_t max_terms) {
    delta.validate();
    CombinationReport rep;
    if (f.is_zero()) return rep;
    if (!std::isfinite(f.support_hi))
        throw DomainError("meijer_combination: the d(n) series needs f supported on a bounded-above set");
    // Below argument a_min = 2 e^{(x-b)/2}, terms with a_min √n ≥ 42 are negligible.
    const double b = f.support_hi;
    const double amin = 2.0 * std::exp(0.5 * (x - b));
    const double Nd = std::ceil(std::pow(42.0 / amin, 2));
    if (Nd > double(max_terms))
        throw ConvergenceError("meijer_combination: support extends too far right of x (window insufficiency)");
    const std::size_t N = std::max<std::size_t>(static_cast<std::size_t>(Nd), 1);
    rep.N = N;
    const auto dn = arith::build_table(arith::Fn::d, N);
    const double d = delta.delta;
    const double lo = std::max(f.support_lo, x - 2.0 * std::log(23.0) - 1.0);
    const double s2 = std::sqrt(2.0);
    auto series = [&](double u) {
        const double a = 2.0 * std::exp(0.5 * (x - u));
        double s = 0.0;
        for (std::size_t n = 1; n <= N; ++n) {
            const double r = a * std::sqrt(double(n));
            if (r > 745.0) break;
            s += double(dn.integer(n)) * (specfun::bessel_k0(r) - 4.0 * specfun::bessel_k0(s2 * r) +
                                          4.0 * specfun::bessel_k0(2.0 * r));
        }
        return s;
    };
    auto g = [&](double u) { return std::exp(-d * u) * f.f(u) * series(u); };
    const auto q = panel_integrate(g, lo, std::max(lo, b), f.breakpoints, 0.5);
    auto wabs = [&](double u) { return std::exp(-d * u) * std::abs(f.f(u)); };
    const auto w = panel_integrate(wabs, lo, std::max(lo, b), f.breakpoints, 0.5);
    rep.tail_bound = bessel_series_tail(amin, N) * w.value;
    rep.value = q.value;
    rep.abs_error = q.abs_error + rep.tail_bound;
    return rep;
}

double meijer_peak(std::size_t n, SalemParam delta, double x) {
    delta.validate();
    if (n == 0) throw DomainError("meijer_peak: n must be positive");
    const double ln_n = std::log(double(n)), d = delta.delta;
    auto g = [&](double u) { return -d * u + std::log(specfun::bessel_k0(2.0 * std::exp(0.5 * (ln_n + x - u)))); };
    // Coarse scan, then golden-section refinement of the log-kernel.
    double best = x + ln_n, bv = -kInf;
    for (double u = x + ln_n - 10.0; u <= x + ln_n + 20.0; u += 0.05) {
        const double v = g(u);
        if (v > bv) bv = v, best = u;
    }
    double a = best - 0.05, c = best + 0.05;
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = c - phi * (c - a), x2 = a + phi * (c - a);
    double f1 = g(x1), f2 = g(x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 > f2) {
            c = x2, x2 = x1, f2 = f1, x1 = c - phi * (c - a), f1 = g(x1);
        } else {
            a = x1, x1 = x2, f1 = f2, x2 = a + phi * (c - a), f2 = g(x2);
        }
    }
    return 0.5 * (a + c);
}

Estimate translation_weight_norm(KernelOrder order, SalemParam delta, const quad::ContourSpec& spec) {
    delta.validate();
    const auto r = u_moment_quadrature(order, delta.delta, spec);
    return {r.value.real(), r.abs_error + std::abs(r.value.imag())};
}

}  // namespace rmt::salem
