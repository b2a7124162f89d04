#include "rmt/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rmt/parallel.hpp"
#include "rmt/specfun.hpp"

namespace rmt::mellin {

namespace sf = rmt::specfun;

MellinPair::MellinPair(quad::ComplexFn f_star, double c0, std::string label, Strip strip)
    : f_(std::make_shared<const quad::ComplexFn>(std::move(f_star))),
      c0_(c0),
      label_(std::move(label)),
      strip_(strip) {
    require_finite(c0, "MellinPair c0");
    if (!strip_.contains(c0_) && !(strip_.lo == c0_ && strip_.hi == c0_))
        throw DomainError("MellinPair '" + label_ + "': c0 lies outside the admissible strip");
}

MellinPair MellinPair::with_c0(double c) const {
    if (!strip_.contains(c)) throw DomainError("MellinPair '" + label_ + "': abscissa outside the admissible strip");
    MellinPair p = *this;
    p.c0_ = c;
    return p;
}

MellinPair MellinPair::scaled(cplx alpha) const {
    auto f = f_;
    MellinPair p([f, alpha](cplx s) { return alpha * (*f)(s); }, c0_, label_, strip_);
    p.zero_ = zero_ || alpha == cplx(0.0, 0.0);
    return p;
}

MellinPair MellinPair::zero(double c0) {
    MellinPair p([](cplx) { return cplx(0.0, 0.0); }, c0, "zero", Strip{});
    p.zero_ = true;
    return p;
}

MellinPair operator+(const MellinPair& a, const MellinPair& b) {
    if (a.c0_ != b.c0_) throw UsageError("MellinPair sum: abscissae differ");
    auto fa = a.f_;
    auto fb = b.f_;
    Strip st{std::max(a.strip_.lo, b.strip_.lo), std::min(a.strip_.hi, b.strip_.hi)};
    MellinPair p([fa, fb](cplx s) { return (*fa)(s) + (*fb)(s); }, a.c0_, a.label_ + "+" + b.label_, st);
    p.zero_ = a.zero_ && b.zero_;
    return p;
}

namespace {

quad::ContourSpec on_line(const quad::ContourSpec& spec, double c0) {
    quad::ContourSpec s = spec;
    s.c0 = c0;
    return s;
}

}  // namespace

CEstimate eval(const MellinPair& fp, double x, const quad::ContourSpec& spec, double tol) {
    if (!(x > 0.0)) throw DomainError("eval: x must be positive");
    if (fp.is_zero()) return {};
    const auto r = quad::integrate_contour(fp.evaluator(), on_line(spec, fp.c0()), x, tol);
    return {r.value, r.abs_error_estimate};
}

PhysicalFunction::PhysicalFunction(const MellinPair& fp, const quad::ContourSpec& spec, double tol) : fp_(fp) {
    if (!fp.is_zero())
        ev_ = std::make_shared<const quad::ContourEvaluator>(fp.evaluator(), on_line(spec, fp.c0()), tol);
}

Estimate PhysicalFunction::at_log(double log_x) const {
    if (!ev_) return {};
    const auto r = ev_->eval_log(log_x);
    return {r.value.real(), r.abs_error_estimate};
}

Estimate PhysicalFunction::operator()(double x) const {
    if (!(x > 0.0)) throw DomainError("physical evaluation: x must be positive");
    return at_log(std::log(x));
}

NormReport m_norm(const MellinPair& fp, const quad::ContourSpec& spec, double tol) {
    if (fp.is_zero()) return {};
    const quad::LineGrid grid(on_line(spec, fp.c0()));
    const double c0 = fp.c0();
    auto integrate = [&](const quad::NodeRule& r) {
        std::vector<double> v(r.x.size());
        par::parallel_for(r.x.size(), [&](std::size_t j) { v[j] = r.w[j] * std::abs(fp.f_star(cplx(c0, r.x[j]))); });
        return par::ordered_sum<double>(v.size(), [&](std::size_t j) { return v[j]; }) / (2.0 * kPi);
    };
    const double fine = integrate(grid.fine);
    const double coarse = integrate(grid.coarse);
    const double T = spec.height;
    const double delta = std::max(0.5, T / 20.0);
    auto strip_max = [&](double a, double b) {
        double m = 0.0;
        for (int j = 0; j <= 8; ++j) {
            const double t = a + (b - a) * j / 8.0;
            m = std::max({m, std::abs(fp.f_star(cplx(c0, t))), std::abs(fp.f_star(cplx(c0, -t)))});
        }
        return m;
    };
    const double inner = strip_max(T - 2.0 * delta, T - delta);
    const double outer = strip_max(T - delta, T);
    double tail = 0.0;
    if (outer > 0.0) {
        if (!(inner > outer))
            throw ConvergenceError("m_norm: |f*| does not decay by the truncation height (divergence diagnostic)");
        tail = 2.0 * outer / (std::log(inner / outer) / delta) / (2.0 * kPi);
    }
    if (tail > std::max(tol, tol * fine))
        throw ConvergenceError("m_norm: truncation tail exceeds tolerance; increase --height");
    return {fine, tail, std::abs(fine - coarse) + tail};
}

void SpaceSpec::validate() const {
    auto sgn = [](double v) { return (v > 0.0) - (v < 0.0); };
    if (2 * sgn(c1) + sgn(c2) < 0) throw DomainError("SpaceSpec: 2 sign(c1) + sign(c2) must be nonnegative");
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::member: return "member";
        case Verdict::inconclusive: return "inconclusive";
        case Verdict::diverges: return "diverges";
    }
    return "?";
}

MembershipReport weighted_membership(const MellinPair& fp, const SpaceSpec& spec, const quad::ContourSpec& contour) {
    spec.validate();
    const double c0 = spec.c0;
    // log of e^{πc1|s|}|s^{c2} f*(s)|, kept in logs so the weight cannot overflow
    auto log_g = [&](double t) {
        const cplx s(c0, t);
        const double m = std::abs(fp.f_star(s));
        if (m == 0.0) return -std::numeric_limits<double>::infinity();
        return kPi * spec.c1 * std::abs(s) + spec.c2 * std::log(std::abs(s)) + std::log(m);
    };
    auto g = [&](double t) { return std::exp(log_g(t)) + std::exp(log_g(-t)); };
    MembershipReport rep;
    rep.height = contour.height;
    const quad::LineGrid grid(on_line(contour, c0));
    std::vector<double> v(grid.fine.x.size());
    par::parallel_for(v.size(), [&](std::size_t j) {
        const double e = log_g(grid.fine.x[j]);
        v[j] = grid.fine.w[j] * (e < 700.0 ? std::exp(e) : std::numeric_limits<double>::infinity());
    });
    rep.value = par::ordered_sum<double>(v.size(), [&](std::size_t j) { return v[j]; }) / (2.0 * kPi);

    // Tail trend: least-squares slope of log g against log t on [T/10, T].
    const double T = contour.height;
    constexpr int kSamples = 17;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    bool vanished = false;
    for (int k = 0; k < kSamples; ++k) {
        const double t = T * std::pow(10.0, -static_cast<double>(k) / (kSamples - 1));
        const double val = g(t);
        if (val == 0.0) {
            vanished = true;
            continue;
        }
        const double lx = std::log(t), ly = std::log(val);
        sx += lx, sy += ly, sxx += lx * lx, sxy += lx * ly;
        ++n;
    }
    if (n < 2) {
        rep.tail_slope = -std::numeric_limits<double>::infinity();
        rep.verdict = Verdict::member;
        return rep;
    }
    rep.tail_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    if (vanished || rep.tail_slope < -1.5)
        rep.verdict = Verdict::member;
    else if (rep.tail_slope > 0.5 || !std::isfinite(rep.value))
        rep.verdict = Verdict::diverges;
    else
        rep.verdict = Verdict::inconclusive;
    return rep;
}

MellinPair mellin_convolution(const MellinPair& fp, const quad::ComplexFn& g_star, const std::string& label) {
    auto f = std::make_shared<const quad::ComplexFn>(fp.evaluator());
    auto g = std::make_shared<const quad::ComplexFn>(g_star);
    MellinPair p([f, g](cplx s) { return (*f)(s) * (*g)(s); }, fp.c0(), label.empty() ? fp.label() + "*g" : label,
                 fp.strip());
    return fp.is_zero() ? fp : p;
}

namespace {

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw UsageError("pair definition: cannot parse number '" + item + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos)
            throw UsageError("pair definition: cannot parse number '" + item + "'");
        out.push_back(v);
    }
    return out;
}

cplx polyval(const std::vector<double>& c, cplx s) {
    cplx r = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * s + *it;
    return r;
}

// scale · poly(s)/denpoly(s) · dilation^{-s} · Π Γ(s + a_i)
MellinPair make_user_pair(const std::string& name, const std::map<std::string, std::string>& f) {
    auto get = [&](const std::string& k, const std::string& dflt) {
        auto it = f.find(k);
        return it == f.end() ? dflt : it->second;
    };
    const auto shifts = parse_list(get("gamma", "0"));
    const auto poly = parse_list(get("poly", "1"));
    const auto den = parse_list(get("denpoly", "1"));
    const auto dil = parse_list(get("dilation", "1"));
    const auto scale = parse_list(get("scale", "1"));
    if (dil.size() != 1 || !(dil[0] > 0.0)) throw UsageError("pair." + name + ".dilation must be one positive number");
    if (scale.size() != 1) throw UsageError("pair." + name + ".scale must be one number");
    if (poly.empty() || den.empty()) throw UsageError("pair." + name + ": empty polynomial");
    double lo = -std::numeric_limits<double>::infinity();
    for (double a : shifts) lo = std::max(lo, -a);
    Strip st{lo, std::numeric_limits<double>::infinity()};
    if (f.count("strip_lo")) st.lo = parse_list(f.at("strip_lo")).at(0);
    if (f.count("strip_hi")) st.hi = parse_list(f.at("strip_hi")).at(0);
    const double c0 = parse_list(get("c0", "2")).at(0);
    const double ld = std::log(dil[0]);
    const double sc = scale[0];
    return MellinPair(
        [=](cplx s) {
            cplx lg = -s * ld;
            for (double a : shifts) lg += sf::log_gamma(s + a);
            return sc * polyval(poly, s) / polyval(den, s) * std::exp(lg);
        },
        c0, name, st);
}

}  // namespace

Registry::Registry() {
    const double inf = std::numeric_limits<double>::infinity();
    pairs_.emplace("exp", MellinPair([](cplx s) { return sf::gamma(s); }, 2.0, "exp", Strip{0.0, inf}));
    pairs_.emplace("xexp", MellinPair([](cplx s) { return sf::gamma(s + 1.0); }, 2.0, "xexp", Strip{-1.0, inf}));
    pairs_.emplace("gauss2", MellinPair(
                                 [](cplx s) {
                                     const cplx g = sf::gamma(s);
                                     return g * g;
                                 },
                                 2.0, "gauss2", Strip{0.0, inf}));
    pairs_.emplace("klt_ref", MellinPair(
                                  [](cplx s) { return s * std::exp(-s * kLn2 + sf::log_gamma(s + 3.0)); }, -1.0,
                                  "klt_ref", Strip{-3.0, inf}));
    pairs_.emplace("zero", MellinPair::zero(2.0));
}

void Registry::load(const std::map<std::string, std::string>& kv) {
    std::map<std::string, std::map<std::string, std::string>> defs;
    for (const auto& [k, v] : kv) {
        if (k.rfind("pair.", 0) != 0) continue;
        const auto dot = k.find('.', 5);
        if (dot == std::string::npos) throw UsageError("config key '" + k + "' must look like pair.<name>.<field>");
        const std::string name = k.substr(5, dot - 5);
        const std::string field = k.substr(dot + 1);
        static const std::vector<std::string> fields{"gamma", "poly", "denpoly", "dilation", "scale",
                                                     "c0",    "strip_lo", "strip_hi"};
        if (std::find(fields.begin(), fields.end(), field) == fields.end())
            throw UsageError("config key '" + k + "': unknown pair field '" + field + "'");
        defs[name][field] = v;
    }
    for (const auto& [name, f] : defs) {
        pairs_.erase(name);
        pairs_.emplace(name, make_user_pair(name, f));
    }
}

MellinPair Registry::get(const std::string& name) const {
    auto it = pairs_.find(name);
    if (it == pairs_.end()) throw UsageError("unknown Mellin pair '" + name + "'");
    return it->second;
}

std::vector<std::string> Registry::names() const {
    std::vector<std::string> out;
    for (const auto& kv : pairs_) out.push_back(kv.first);
    return out;
}

double builtin_physical(const std::string& name, double x) {
    if (name == "exp") return std::exp(-x);
    if (name == "xexp") return x * std::exp(-x);
    if (name == "gauss2") return 2.0 * sf::bessel_k0(2.0 * std::sqrt(x));
    if (name == "klt_ref") return 8.0 * x * x * x * (2.0 * x - 3.0) * std::exp(-2.0 * x);
    if (name == "zero") return 0.0;
    throw UsageError("no closed form for pair '" + name + "'");
}

}  // namespace rmt::mellin
