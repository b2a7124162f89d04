#include "rmt/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <string>

#include "rmt/parallel.hpp"

namespace rmt::quad {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

NodeRule compute_gauss_legendre(int n) {
    NodeRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = z;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p1 = z, p0 = 1.0;
            dp = n * (z * p1 - p0) / (z * z - 1.0);
            const double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        r.x[i] = -z;
        r.x[n - 1 - i] = z;
        r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
    return r;
}


}  // namespace

void ContourSpec::validate() const {
    if (!std::isfinite(c0)) throw UsageError("ContourSpec: c0 must be finite");
    if (!(height > 0.0) || !std::isfinite(height)) throw UsageError("ContourSpec: height must be positive");
    if (nodes < 16) throw UsageError("ContourSpec: at least 16 nodes required");
}

const NodeRule& gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<int, NodeRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
    return it->second;
}

NodeRule gl_panels(double lo, double hi, int panels, int order) {
    const NodeRule& g = gauss_legendre(order);
    NodeRule r;
    r.x.reserve(static_cast<std::size_t>(panels) * order);
    r.w.reserve(static_cast<std::size_t>(panels) * order);
    const double width = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = lo + (p + 0.5) * width;
        for (int j = 0; j < order; ++j) {
            r.x.push_back(mid + 0.5 * width * g.x[j]);
            r.w.push_back(0.5 * width * g.w[j]);
        }
    }
    return r;
}

LineGrid::LineGrid(const ContourSpec& spec) {
    spec.validate();
    const double T = spec.height;
    if (spec.rule == ContourRule::gauss_legendre_panels) {
        int panels = std::max(2, (spec.nodes + 15) / 16);
        panels += panels % 2;
        fine = gl_panels(-T, T, panels);
        coarse = gl_panels(-T, T, panels / 2);
    } else {
        int n = std::max(3, spec.nodes);
        n += (n % 2 == 0);  // odd count so the coarse rule nests
        const double h = 2.0 * T / (n - 1);
        for (int j = 0; j < n; ++j) {
            fine.x.push_back(-T + j * h);
            fine.w.push_back((j == 0 || j == n - 1) ? 0.5 * h : h);
        }
        for (int j = 0; j < n; j += 2) {
            coarse.x.push_back(-T + j * h);
            coarse.w.push_back((j == 0 || j == n - 1) ? h : 2.0 * h);
        }
    }
}

ContourEvaluator::ContourEvaluator(const ComplexFn& f_star, const ContourSpec& spec, double tail_tol)
    : spec_(spec), tail_tol_(tail_tol) {
    const LineGrid grid(spec);
    auto fill = [&](const NodeRule& r, Samples& out) {
        out.t = r.x;
        out.wf.assign(r.x.size(), cplx(0.0, 0.0));
        par::parallel_for(r.x.size(), [&](std::size_t j) {
            const cplx v = f_star(cplx(spec.c0, r.x[j]));
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw ConvergenceError("contour: non-finite Mellin-side value on the line");
            out.wf[j] = r.w[j] * v / (2.0 * kPi);
        });
    };
    fill(grid.fine, fine_);
    fill(grid.coarse, coarse_);

    // Decay of |f*| over the last two strips [T-2Δ, T-Δ], [T-Δ, T] at both ends.
    const double T = spec.height;
    const double delta = std::max(0.5, T / 20.0);
    auto strip_max = [&](double a, double b) {
        double m = 0.0;
        for (int j = 0; j <= 8; ++j) {
            const double t = a + (b - a) * j / 8.0;
            m = std::max({m, std::abs(f_star(cplx(spec.c0, t))), std::abs(f_star(cplx(spec.c0, -t)))});
        }
        return m;
    };
    const double inner = strip_max(T - 2.0 * delta, T - delta);
    end_mag_ = strip_max(T - delta, T);
    if (end_mag_ == 0.0)
        decay_rate_ = std::numeric_limits<double>::infinity();
    else if (inner > end_mag_)
        decay_rate_ = std::log(inner / end_mag_) / delta;
    else
        decay_rate_ = 0.0;
}

cplx ContourEvaluator::sum(const Samples& smp, double log_x, double* abs_sum) const {
    const std::size_t n = smp.t.size();
    if (abs_sum)
        *abs_sum = par::ordered_sum<double>(n, [&](std::size_t j) { return std::abs(smp.wf[j]); });
    return par::ordered_sum<cplx>(n, [&](std::size_t j) {
        const double ph = -smp.t[j] * log_x;
        return smp.wf[j] * cplx(std::cos(ph), std::sin(ph));
    });
}

QuadResult ContourEvaluator::eval_log(double log_x) const {
    require_finite(log_x, "contour eval");
    const double scale = std::exp(-spec_.c0 * log_x);
    double mass = 0.0;
    const cplx fine = sum(fine_, log_x, &mass) * scale;
    const cplx coarse = sum(coarse_, log_x, nullptr) * scale;
    double tail;
    if (end_mag_ == 0.0)
        tail = 0.0;
    else if (decay_rate_ > 0.0)
        tail = 2.0 * end_mag_ / decay_rate_ / (2.0 * kPi) * scale;
    else
        tail = std::numeric_limits<double>::infinity();
    QuadResult r;
    r.value = fine;
    r.evaluations = static_cast<long>(fine_.t.size() + coarse_.t.size());
    r.abs_error_estimate = std::abs(fine - coarse) + tail + 64.0 * kEps * mass * scale;
    if (tail > std::max(tail_tol_, tail_tol_ * std::abs(fine)))
        throw ConvergenceError("contour: integrand not negligible at |Im s| = height (tail estimate " +
                               std::to_string(tail) + "); increase --height");
    return r;
}

QuadResult ContourEvaluator::eval(double x) const {
    if (!(x > 0.0)) throw DomainError("contour eval: x must be positive");
    return eval_log(std::log(x));
}

QuadResult integrate_contour(const ComplexFn& f_star, const ContourSpec& spec, double x, double tail_tol) {
    if (!(x > 0.0)) throw DomainError("integrate_contour: x must be positive");
    return ContourEvaluator(f_star, spec, tail_tol).eval(x);
}

namespace {

// Generic double-exponential driver: nodes u = j h on [-umax, umax], mapped by `map`
// to (abscissa, weight). Step halving until successive sums agree.
template <class Map>
QuadResult de_driver(const std::function<cplx(double)>& g, Map&& map, double umax, double tol, long max_evals,
                     const char* what) {
    auto term = [&](double u, double* mass) -> cplx {
        double x, w;
        if (!map(u, x, w) || w == 0.0) return 0.0;
        const cplx v = g(x);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw ConvergenceError(std::string(what) + ": non-finite integrand at x = " + std::to_string(x));
        *mass += std::abs(v) * w;
        return v * w;
    };
    double h = 0.5;
    double mass = 0.0;
    cplx sum = term(0.0, &mass);
    long evals = 1;
    for (int j = 1; j * h <= umax; ++j) {
        sum += term(j * h, &mass) + term(-j * h, &mass);
        evals += 2;
    }
    cplx prev = sum * h;
    for (int level = 1;; ++level) {
        h *= 0.5;
        for (int j = 1; j * h <= umax; j += 2) {
            sum += term(j * h, &mass) + term(-j * h, &mass);
            evals += 2;
        }
        const cplx cur = sum * h;
        const double diff = std::abs(cur - prev);
        if (level >= 3 && diff <= tol * std::max(std::abs(cur), 1e-4 * mass * h))
            return {cur, diff + 64.0 * kEps * mass * h, evals};
        if (evals > max_evals)
            throw ConvergenceError(std::string(what) + ": no convergence within the evaluation budget");
        prev = cur;
    }
}

}  // namespace

QuadResult integrate_halfline(const std::function<cplx(double)>& g, double tol, long max_evals) {
    auto map = [](double u, double& x, double& w) {
        const double e = 0.5 * kPi * std::sinh(u);
        if (e > 700.0 || e < -700.0) return false;
        x = std::exp(e);
        w = 0.5 * kPi * std::cosh(u) * x;
        return std::isfinite(w);
    };
    return de_driver(g, map, 5.0, tol, max_evals, "integrate_halfline");
}

QuadResult integrate_finite(const std::function<cplx(double)>& g, double a, double b, double tol, long max_evals) {
    if (!(b > a)) {
        if (a == b) return {};
        throw DomainError("integrate_finite: requires a <= b");
    }
    const double half = 0.5 * (b - a);
    auto map = [&](double u, double& x, double& w) {
        const double v = 0.5 * kPi * std::sinh(u);
        const double av = std::abs(v);
        if (av > 350.0) return false;
        // distance to the nearer endpoint, computed without cancellation
        const double dist = (b - a) / (std::exp(2.0 * av) + 1.0);
        if (dist == 0.0) return false;
        x = u >= 0.0 ? b - dist : a + dist;
        if (x <= a || x >= b) return false;
        const double ch = std::cosh(v);
        w = half * 0.5 * kPi * std::cosh(u) / (ch * ch);
        return true;
    };
    return de_driver(g, map, 4.0, tol, max_evals, "integrate_finite");
}

QuadResult integrate_line(const std::function<cplx(double)>& g, double tol, long max_evals) {
    auto map = [](double u, double& x, double& w) {
        const double e = 0.5 * kPi * std::sinh(u);
        x = std::sinh(e);
        w = 0.5 * kPi * std::cosh(u) * std::cosh(e);
        return std::isfinite(x) && std::isfinite(w);
    };
    return de_driver(g, map, 3.0, tol, max_evals, "integrate_line");
}

QuadResult integrate_window(const std::function<double(double)>& g, double lo, double hi, double h) {
    if (!(hi > lo)) return {};
    int n = std::max(2, static_cast<int>(std::ceil((hi - lo) / h)));
    n += n % 2;
    const double step = (hi - lo) / n;
    std::vector<double> vals(n + 1);
    par::parallel_for(vals.size(), [&](std::size_t j) { vals[j] = g(lo + step * static_cast<double>(j)); });
    double fine = 0.5 * (vals[0] + vals[n]);
    double coarse = fine;
    double mass = 0.0;
    for (int j = 1; j < n; ++j) {
        fine += vals[j];
        if (j % 2 == 0) coarse += vals[j];
        mass += std::abs(vals[j]);
    }
    fine *= step;
    coarse *= 2.0 * step;
    return {cplx(fine, 0.0), std::abs(fine - coarse) + 64.0 * kEps * mass * step, n + 1};
}

}  // namespace rmt::quad
