#include "commands.hpp"

#include <algorithm>
#include <cmath>

#include "rmt/arith.hpp"
#include "rmt/dirichlet.hpp"
#include "rmt/klt.hpp"
#include "rmt/parallel.hpp"
#include "rmt/salem.hpp"
#include "rmt/specfun.hpp"
#include "rmt/transforms.hpp"

namespace rmt::cli {

namespace {

// Difference against a tolerance that is never tighter than the propagated error.
json agreement(double difference, double error, double agree_tol, Status& status) {
    const double tol = std::max(agree_tol, error);
    const bool agree = difference <= tol;
    if (!agree) status = Status::inconclusive;
    return json{{"difference", fmt(difference)}, {"tolerance", fmt(tol)}, {"agree", agree ? "true" : "false"}};
}

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

}  // namespace

Outcome run_arith(const Context&, const ArithArgs& a) {
    if (a.max < 1) throw DomainError("arith: --max must be at least 1");
    if (a.max > kMaxArithRows) throw DomainError("arith: --max exceeds the row cap of " + fmt_int(kMaxArithRows));
    const arith::Fn fn = arith::parse_fn(a.fn);
    std::optional<cplx> param;
    if (a.a) param = parse_complex(*a.a, "--a");
    const auto table = arith::build_table(fn, static_cast<std::size_t>(a.max), param);
    Outcome out;
    out.result["fn"] = arith::to_string(fn);
    out.result["max"] = fmt_int(a.max);
    if (param) out.result["a"] = cnum(*param);
    out.result["values"] = table.integral() ? "exact integers" : "complex, re and im columns";
    if (table.integral()) {
        out.table.push_back({"n", "value"});
        for (std::size_t n = 1; n <= table.size(); ++n) out.table.push_back({fmt_int(n), fmt_int(table.integer(n))});
    } else {
        out.table.push_back({"n", "re", "im"});
        for (std::size_t n = 1; n <= table.size(); ++n)
            out.table.push_back({fmt_int(n), fmt(table[n].real()), fmt(table[n].imag())});
    }
    return out;
}

Outcome run_specfun(const Context&, const SpecfunArgs& a) {
    Outcome out;
    out.result["fn"] = a.fn;
    out.result["args"] = a.args;
    if (a.fn == "gamma" || a.fn == "zeta" || a.fn == "eta") {
        const cplx s = parse_complex(a.args, "--args");
        cplx v;
        double rel = 1e-13;
        if (a.fn == "gamma") {
            v = specfun::gamma(s);
        } else if (a.fn == "zeta") {
            v = specfun::zeta(s);
        } else {
            v = specfun::eta(s);
            rel = 1e-14;
        }
        out.result["value"] = cest(v, rel * std::abs(v));
        out.result["error_model"] = "nominal relative " + fmt(rel);
        return out;
    }
    if (a.fn == "besselk") {
        const auto comma = a.args.find(',');
        if (comma == std::string::npos) throw UsageError("besselk: --args ORDER,X with ORDER real or iT");
        const std::string ord = a.args.substr(0, comma);
        const double x = parse_double(a.args.substr(comma + 1), "--args");
        const auto order = !ord.empty() && ord[0] == 'i'
                               ? specfun::BesselOrder::imaginary(parse_double(ord.substr(1), "--args"))
                               : specfun::BesselOrder::real(parse_double(ord, "--args"));
        out.result["value"] = est(specfun::bessel_k(order, x));
        out.result["error_model"] = "quadrature estimate";
        return out;
    }
    if (a.fn == "besselj1") {
        const double x = parse_double(a.args, "--args");
        const double v = specfun::bessel_j1(x);
        out.result["value"] = est(v, 1e-14 * std::max(1.0, std::abs(v)));
        out.result["error_model"] = "nominal absolute 1e-14";
        return out;
    }
    if (a.fn == "legendre") {
        const auto p = parse_list(a.args, "--args");
        if (p.size() != 2) throw UsageError("legendre: --args TAU,Z");
        const cplx v = specfun::legendre_p_half(p[0], p[1]);
        out.result["value"] = cest(v, 1e-13 * std::abs(v));
        out.result["error_model"] = "nominal relative 1e-13";
        return out;
    }
    throw UsageError("specfun: unknown --fn '" + a.fn + "' (gamma|zeta|eta|besselk|besselj1|legendre)");
}

Outcome run_verify(const Context& ctx, const VerifyArgs& a) {
    dirichlet::IdentitySpec spec;
    spec.id = dirichlet::parse_identity(a.identity);
    if (a.a) spec.a = parse_complex(*a.a, "--a");
    if (a.b) spec.b = parse_complex(*a.b, "--b");
    spec.validate();
    const cplx s = parse_complex(a.s, "--s");
    const auto r = dirichlet::verify(spec, s, ctx.settings.count_or(100'000));
    Outcome out;
    out.result["identity"] = dirichlet::to_string(spec.id);
    if (spec.a) out.result["a"] = cnum(*spec.a);
    if (spec.b) out.result["b"] = cnum(*spec.b);
    out.result["s"] = cnum(r.s);
    out.result["lhs"] = cnum(r.lhs);
    out.result["rhs_partial"] = cnum(r.rhs_partial);
    out.result["N"] = fmt_int(static_cast<long long>(r.N));
    out.result["abs_residual"] = num(r.abs_residual);
    out.result["rel_residual"] = num(r.rel_residual);
    out.result["tail_estimate"] = num(r.tail_estimate);
    out.result["tolerance"] = num(r.tolerance);
    out.result["verdict"] = dirichlet::to_string(r.verdict);
    if (r.verdict != dirichlet::Verdict::verified) out.status = Status::inconclusive;
    return out;
}

namespace {

json series_json(const transforms::SeriesResult& r) {
    return json{{"value", cnum(r.value)},       {"error_bound", fmt(r.error_bound)},
                {"index_tail", fmt(r.index_tail)}, {"lattice_cut", fmt(r.lattice_cut)},
                {"quad_error", fmt(r.quad_error)}, {"N", fmt_int(static_cast<long long>(r.N))},
                {"J", fmt_int(static_cast<long long>(r.J))}, {"terms", fmt_int(static_cast<long long>(r.terms))}};
}

json lambert_json(const transforms::LambertReport& r, const Context& ctx, Status& st) {
    json j;
    j["halfline"] = est(r.halfline);
    j["contour"] = est(r.contour);
    j["agreement"] = agreement(r.difference, r.halfline.abs_error + r.contour.abs_error, ctx.settings.agree_tol, st);
    return j;
}

}  // namespace

Outcome run_transform(const Context& ctx, const TransformArgs& a) {
    const auto fp = ctx.pair(a.f);
    const auto spec = ctx.settings.contour();
    Outcome out;
    out.result["kind"] = a.kind;
    out.result["f"] = a.f;
    out.result["x"] = num(a.x);
    out.result["c0"] = num(fp.c0());
    if (a.kind.rfind("series:", 0) == 0) {
        const auto t = transforms::parse_transform(a.kind.substr(7));
        transforms::SeriesOptions opt;
        opt.contour = spec;
        opt.tol = ctx.settings.quad_tol;
        const auto lat = transforms::apply_series(t, fp, a.x, ctx.settings.count_or(300), opt);
        const auto con = mellin::eval(transforms::transformed_pair({t}, fp), a.x, spec, ctx.settings.quad_tol);
        out.result["series"] = series_json(lat);
        out.result["contour"] = cest(con);
        out.result["agreement"] = agreement(std::abs(lat.value - con.value), lat.error_bound + con.abs_error,
                                            ctx.settings.agree_tol, out.status);
        return out;
    }
    if (a.kind.rfind("expansion:", 0) == 0) {
        const auto e = transforms::parse_expansion(a.kind.substr(10));
        transforms::SeriesOptions opt;
        opt.contour = spec;
        opt.tol = ctx.settings.quad_tol;
        const auto r = transforms::check_expansion(e, fp, a.x, ctx.settings.count_or(300), opt);
        out.result["expansion"] = transforms::to_string(r.id);
        out.result["target"] = cnum(r.target);
        out.result["nested"] = cnum(r.nested);
        out.result["residual"] = num(r.residual);
        out.result["tail_bound"] = num(r.tail_bound);
        out.result["within_bound"] = r.within_bound ? "true" : "false";
        out.result["series"] = series_json(r.series);
        if (!r.within_bound || r.inconclusive) out.status = Status::inconclusive;
        return out;
    }
    if (a.kind == "lambert" || a.kind == "widder-lambert") {
        const auto kind = a.kind == "lambert" ? transforms::LambertKind::bose : transforms::LambertKind::fermi;
        out.result["lambert"] = transforms::to_string(kind);
        out.result["paths"] = lambert_json(transforms::lambert_transform(kind, fp, a.x, spec, ctx.settings.quad_tol),
                                           ctx, out.status);
        return out;
    }
    throw UsageError("transform: unknown --kind '" + a.kind +
                     "' (series:<weight>|expansion:<id>|lambert|widder-lambert)");
}

Outcome run_invert(const Context& ctx, const InvertArgs& a) {
    const auto fp = ctx.pair(a.f);
    const auto spec = ctx.settings.contour();
    const double tol = ctx.settings.quad_tol;
    const auto target = mellin::eval(fp, a.x, spec, tol);
    Outcome out;
    out.result["kind"] = a.kind;
    out.result["f"] = a.f;
    out.result["x"] = num(a.x);
    out.result["target"] = est(target.value.real(), target.abs_error);
    if (a.kind == "moebius") {
        const auto t = transforms::parse_transform(a.series);
        const auto inv = transforms::inverse_chain(t);
        if (!inv) throw UsageError("invert: no inverse series for weight '" + t.name() + "'");
        const auto g = transforms::transformed_pair({t}, fp);
        transforms::SeriesOptions opt;
        opt.contour = spec;
        opt.tol = tol;
        const auto lat = transforms::apply_chain(*inv, g, a.x, ctx.settings.count_or(300), opt);
        const auto con = mellin::eval(transforms::transformed_pair(*inv, g), a.x, spec, tol);
        std::string names;
        for (const auto& c : *inv) names += (names.empty() ? "" : "*") + c.name();
        out.result["series"] = t.name();
        out.result["inverse"] = names;
        out.result["lattice"] = series_json(lat);
        out.result["contour"] = cest(con);
        out.result["agreement"] = agreement(std::abs(lat.value - target.value), lat.error_bound + target.abs_error,
                                            ctx.settings.agree_tol, out.status);
        return out;
    }
    if (a.kind == "widder") {
        if (a.k < 1) throw DomainError("invert: --k must be at least 1");
        const auto kind = transforms::parse_lambert(a.lambert);
        const auto image = transforms::lambert_image(kind, fp);
        const auto F = transforms::widder_approximant(image, kind, a.k, a.x, spec, tol);
        out.result["lambert"] = transforms::to_string(kind);
        out.result["k"] = fmt_int(a.k);
        out.result["approximant"] = est(F);
        // The approximant converges only as k grows; no agreement verdict at finite k.
        out.result["gap"] = num(std::abs(F.value - target.value.real()));
        return out;
    }
    throw UsageError("invert: unknown --kind '" + a.kind + "' (moebius|widder)");
}

namespace {

json kernel_json(const klt::KernelValue& v) {
    return json{{"value", fmt(v.value)}, {"error", fmt(v.abs_error)}, {"terms", fmt_int(static_cast<long long>(v.terms))}};
}

double forward_height(const Settings& s, double tau) { return std::max(s.height, tau + 40.0); }
int forward_nodes(const Settings& s, double height) {
    return std::max(s.nodes, 16 * static_cast<int>(std::ceil(2.0 * height)));
}

}  // namespace

Outcome run_klt(const Context& ctx, const KltArgs& a) {
    const auto spec = ctx.settings.contour();
    const double tol = ctx.settings.quad_tol;
    Outcome out;
    out.result["op"] = a.op;
    if (a.op == "kernel") {
        out.result["tau"] = num(a.tau);
        out.result["x"] = num(a.x);
        if (a.method != "all") {
            const auto m = klt::parse_kernel_method(a.method);
            out.result[klt::to_string(m)] = kernel_json(klt::ml_kernel(a.tau, a.x, m, spec));
            return out;
        }
        const auto integral = klt::ml_kernel(a.tau, a.x, klt::KernelMethod::integral, spec);
        if (a.x < klt::kMinKernelX) {
            out.result["integral"] = kernel_json(integral);
            return out;
        }
        const auto series = klt::ml_kernel(a.tau, a.x, klt::KernelMethod::series, spec);
        const auto contour = klt::ml_kernel(a.tau, a.x, klt::KernelMethod::contour, spec);
        out.result["series"] = kernel_json(series);
        out.result["contour"] = kernel_json(contour);
        out.result["integral"] = kernel_json(integral);
        const double diff = std::max(std::abs(series.value - contour.value), std::abs(series.value - integral.value));
        const double err = series.abs_error + std::max(contour.abs_error, integral.abs_error);
        out.result["agreement"] = agreement(diff, err, ctx.settings.agree_tol, out.status);
        return out;
    }
    if (a.op == "moment") {
        const cplx s = parse_complex(a.s, "--s");
        const cplx closed = klt::ml_mellin_moment(a.tau, s);
        const auto q = klt::ml_moment_quadrature(a.tau, s, std::max(tol, 1e-9));
        out.result["tau"] = num(a.tau);
        out.result["s"] = cnum(s);
        out.result["closed_form"] = cnum(closed);
        out.result["quadrature"] = cest(q);
        out.result["agreement"] = agreement(std::abs(closed - q.value), q.abs_error, ctx.settings.agree_tol, out.status);
        return out;
    }
    const auto f = klt::reference_test_function();
    out.result["f"] = f.fp.label();
    if (a.op == "forward") {
        auto fspec = spec;
        fspec.height = forward_height(ctx.settings, a.tau);
        fspec.nodes = forward_nodes(ctx.settings, fspec.height);
        const auto r = klt::klt_forward(f, a.tau, fspec, std::max(tol, 1e-9));
        out.result["tau"] = num(a.tau);
        out.result["halfline"] = est(r.halfline);
        out.result["contour"] = est(r.contour);
        out.result["agreement"] = agreement(r.difference, r.halfline.abs_error + r.contour.abs_error,
                                            ctx.settings.agree_tol, out.status);
        return out;
    }
    if (a.op == "composition") {
        const auto r = klt::composition_check(f, a.tau, ctx.settings.count_or(1000), spec, std::max(tol, 1e-9));
        out.result["tau"] = num(a.tau);
        out.result["ml_transform"] = est(r.ml_transform);
        out.result["kl_transform"] = est(r.kl_transform);
        out.result["series_tail"] = num(r.series_tail);
        out.result["N"] = fmt_int(static_cast<long long>(r.N));
        out.result["agreement"] =
            agreement(r.difference, r.series_tail + r.ml_transform.abs_error + r.kl_transform.abs_error,
                      ctx.settings.agree_tol, out.status);
        return out;
    }
    if (a.op == "cosine") {
        const double tau_max = a.tau_max.value_or(24.0);
        const auto r = klt::cosine_step(f, a.u, tau_max, spec);
        out.result["u"] = num(a.u);
        out.result["tau_max"] = num(tau_max);
        out.result["lhs"] = num(r.lhs);
        out.result["rhs"] = num(r.rhs);
        out.result["agreement"] = agreement(r.difference, r.abs_error, ctx.settings.agree_tol, out.status);
        return out;
    }
    if (a.op == "invert") {
        if (a.kernel_n < 1) throw DomainError("klt invert: --kernel-N must be at least 1");
        const double tau_max = a.tau_max.value_or(12.0);
        const double height = forward_height(ctx.settings, tau_max);
        const klt::ForwardContour Mf(f, height, forward_nodes(ctx.settings, height));
        const auto r = klt::klt_invert([&](double t) { return Mf(t).value; }, a.x, tau_max,
                                       static_cast<std::size_t>(a.kernel_n), std::max(tol, 1e-6));
        const double target = a.x * mellin::builtin_physical("klt_ref", a.x);
        out.result["x"] = num(a.x);
        out.result["tau_max"] = num(tau_max);
        out.result["kernel_N"] = fmt_int(a.kernel_n);
        out.result["reconstruction"] = est(r.value, r.abs_error);
        out.result["target_x_f"] = est(target, 0.0);
        out.result["relative_residual"] = num(std::abs(r.value - target) / std::abs(target));
        out.result["end_integrand"] = num(r.end_integrand);
        out.result["tail_dominant"] = r.tail_dominant ? "true" : "false";
        if (r.tail_dominant) out.status = Status::inconclusive;
        return out;
    }
    throw UsageError("klt: unknown --op '" + a.op + "' (kernel|moment|forward|invert|composition|cosine)");
}

Outcome run_kernel(const Context& ctx, const KernelArgs& a) {
    const salem::KernelOrder order{a.k, a.m};
    order.validate();
    const auto spec = ctx.settings.contour();
    Outcome out;
    out.result["k"] = fmt_int(a.k);
    out.result["m"] = fmt_int(a.m);
    out.result["x"] = num(a.x);
    if (a.method != "both") {
        const auto m = salem::parse_u_method(a.method);
        out.result[salem::to_string(m)] = est(salem::u_kernel(order, a.x, m, spec));
        return out;
    }
    const auto con = salem::u_kernel(order, a.x, salem::UMethod::contour, spec);
    out.result["contour"] = est(con);
    if (a.m <= 2) {
        const auto conv = salem::u_kernel(order, a.x, salem::UMethod::convolution, spec);
        out.result["convolution"] = est(conv);
        out.result["agreement"] = agreement(std::abs(con.value - conv.value), con.abs_error + conv.abs_error,
                                            ctx.settings.agree_tol, out.status);
    }
    return out;
}

namespace {

std::optional<std::pair<int, int>> parse_single_mode(const std::string& mode) {
    for (const char* head : {"single:", "4.6:"}) {
        const std::string h = head;
        if (mode.rfind(h, 0) == 0) {
            const auto km = parse_list(mode.substr(h.size()), "--mode");
            if (km.size() != 2 || km[0] != std::floor(km[0]) || km[1] != std::floor(km[1]))
                throw UsageError("--mode " + h + "K,M needs two integers");
            return std::pair{static_cast<int>(km[0]), static_cast<int>(km[1])};
        }
    }
    return std::nullopt;
}

json residual_json(const salem::ResidualReport& r) {
    return json{{"value", fmt(r.value)},          {"error", fmt(r.abs_error)},
                {"window_lo", fmt(r.window_lo)},  {"window_hi", fmt(r.window_hi)},
                {"edge_weight", fmt(r.edge_weight)}};
}

}  // namespace

Outcome run_salem(const Context& ctx, const SalemArgs& a) {
    if (a.check.has_value() == a.residual) throw UsageError("salem: give exactly one of --check or --residual");
    const auto spec = ctx.settings.contour();
    const double tol = ctx.settings.quad_tol;
    Outcome out;
    const salem::SalemParam delta{a.delta};
    if (a.residual) {
        delta.validate();
        const auto f = salem::parse_bounded(a.f);
        out.result["f"] = f.name;
        out.result["delta"] = num(a.delta);
        out.result["x"] = num(a.x);
        out.result["mode"] = a.mode;
        if (a.mode == "double" || a.mode == "4.2") {
            out.result["residual"] = residual_json(salem::double_residual(f, delta, a.x));
        } else if (const auto km = parse_single_mode(a.mode)) {
            const salem::KernelOrder order{km->first, km->second};
            order.validate();
            out.result["residual"] = residual_json(salem::kernel_residual(f, delta, a.x, order, spec));
        } else if (a.mode == "meijer") {
            const auto c = salem::meijer_combination(f, delta, a.x);
            const auto d = salem::double_residual(f, delta, a.x);
            out.result["combination"] = json{{"value", fmt(c.value)}, {"error", fmt(c.abs_error)},
                                             {"tail_bound", fmt(c.tail_bound)},
                                             {"N", fmt_int(static_cast<long long>(c.N))}};
            out.result["half_double_residual"] = est(0.5 * d.value, 0.5 * d.abs_error);
            out.result["agreement"] = agreement(std::abs(c.value - 0.5 * d.value),
                                                c.abs_error + c.tail_bound + 0.5 * d.abs_error,
                                                ctx.settings.agree_tol, out.status);
        } else {
            throw UsageError("salem: unknown --mode '" + a.mode + "' (double|single:K,M|meijer)");
        }
        return out;
    }
    const std::string check = to_lower(*a.check);
    out.result["check"] = check;
    if (check == "factorization" || check == "4.3") {
        const double s = parse_double(a.s, "--s");
        if (!(s > 0.0)) throw DomainError("salem factorization: s must be positive");
        const auto lhs = salem::factorization_integral(s, std::max(tol, 1e-11));
        const double rhs = salem::u_mellin_moment({1, 1}, s).real();
        out.result["s"] = num(s);
        out.result["integral"] = est(lhs);
        out.result["eta_gamma_squared"] = num(rhs);
        out.result["agreement"] = agreement(std::abs(lhs.value - rhs), lhs.abs_error, ctx.settings.agree_tol, out.status);
        return out;
    }
    if (check == "bessel-series" || check == "4.5") {
        const auto r = salem::bessel_series_identity(a.x, ctx.settings.count_or(200));
        out.result["x"] = num(a.x);
        out.result["integral"] = est(r.lhs, r.lhs_error);
        out.result["series"] = num(r.rhs);
        out.result["tail_bound"] = num(r.tail_bound);
        out.result["N"] = fmt_int(static_cast<long long>(r.N));
        out.result["agreement"] =
            agreement(r.residual, r.tail_bound + r.lhs_error, ctx.settings.agree_tol, out.status);
        if (r.tail_dominant) out.status = Status::inconclusive;
        return out;
    }
    const salem::KernelOrder order{a.k, a.m};
    order.validate();
    out.result["k"] = fmt_int(a.k);
    out.result["m"] = fmt_int(a.m);
    if (check == "moment") {
        const cplx s = parse_complex(a.s, "--s");
        const cplx closed = salem::u_mellin_moment(order, s);
        const auto q = salem::u_moment_quadrature(order, s, spec, tol);
        out.result["s"] = cnum(s);
        out.result["closed_form"] = cnum(closed);
        out.result["quadrature"] = cest(q);
        out.result["agreement"] = agreement(std::abs(closed - q.value), q.abs_error, ctx.settings.agree_tol, out.status);
        return out;
    }
    if (check == "translation") {
        delta.validate();
        const auto q = salem::translation_weight_norm(order, delta, spec);
        const double closed = salem::u_mellin_moment(order, a.delta).real();
        out.result["delta"] = num(a.delta);
        out.result["quadrature"] = est(q);
        out.result["closed_form"] = num(closed);
        out.result["agreement"] = agreement(std::abs(closed - q.value), q.abs_error, ctx.settings.agree_tol, out.status);
        return out;
    }
    throw UsageError("salem: unknown --check '" + *a.check + "' (factorization|bessel-series|moment|translation)");
}

namespace {

std::vector<double> build_grid(const GridArgs& a) {
    const int given = a.logspace.has_value() + a.linspace.has_value() + a.points.has_value();
    if (given != 1) throw UsageError("grid: give exactly one of --logspace, --linspace, --points");
    std::vector<double> xs;
    if (a.points) {
        xs = parse_list(*a.points, "--points");
    } else {
        const auto p = parse_list(a.logspace ? *a.logspace : *a.linspace, a.logspace ? "--logspace" : "--linspace");
        if (p.size() != 3 || p[2] != std::floor(p[2]) || p[2] < 1)
            throw UsageError("grid: expected LO,HI,COUNT with integer COUNT >= 1");
        if (p[2] > static_cast<double>(kMaxGridPoints)) throw DomainError("grid: more than 100000 points");
        const std::size_t n = static_cast<std::size_t>(p[2]);
        if (a.logspace && !(p[0] > 0.0 && p[1] > 0.0)) throw DomainError("grid: logspace ends must be positive");
        for (std::size_t i = 0; i < n; ++i) {
            const double t = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
            xs.push_back(a.logspace ? std::exp(std::log(p[0]) + t * (std::log(p[1]) - std::log(p[0])))
                                    : p[0] + t * (p[1] - p[0]));
        }
        xs.front() = p[0];
        if (n > 1) xs.back() = p[1];
    }
    if (xs.empty()) throw DomainError("grid: empty grid");
    if (xs.size() > kMaxGridPoints) throw DomainError("grid: more than 100000 points");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1])) throw DomainError("grid: points must be strictly increasing");
    return xs;
}

}  // namespace

Outcome run_grid(const Context& ctx, const GridArgs& a) {
    if (a.of.empty()) throw UsageError("grid: empty command payload; pass --of <quantity>");
    const auto xs = build_grid(a);
    const auto spec = ctx.settings.contour();
    const double tol = ctx.settings.quad_tol;
    std::function<Estimate(double)> eval;
    std::shared_ptr<const void> keep;
    Outcome out;
    out.result["of"] = a.of;
    if (a.of == "ml_kernel") {
        out.result["tau"] = num(a.tau);
        eval = [tau = a.tau](double x) {
            const auto v = klt::ml_kernel_auto(tau, x);
            return Estimate{v.value, v.abs_error};
        };
    } else if (a.of == "u_kernel") {
        const salem::KernelOrder order{a.k, a.m};
        order.validate();
        auto u = std::make_shared<const salem::UKernel>(order, spec);
        keep = u;
        out.result["k"] = fmt_int(a.k);
        out.result["m"] = fmt_int(a.m);
        eval = [u](double x) { return (*u)(x); };
    } else if (a.of == "inversion_kernel") {
        const std::size_t N = ctx.settings.count_or(1000);
        out.result["tau"] = num(a.tau);
        out.result["N"] = fmt_int(static_cast<long long>(N));
        eval = [tau = a.tau, N](double x) {
            const auto v = klt::inversion_kernel(tau, x, N);
            return Estimate{v.value, v.tail};
        };
    } else if (a.of == "physical" || a.of == "lambert") {
        auto fp = ctx.pair(a.f);
        out.result["f"] = a.f;
        if (a.of == "lambert") {
            const auto kind = transforms::parse_lambert(a.lambert);
            fp = transforms::lambert_image(kind, fp);
            out.result["lambert"] = transforms::to_string(kind);
        }
        auto pf = std::make_shared<const mellin::PhysicalFunction>(fp, spec, tol);
        keep = pf;
        eval = [pf](double x) { return (*pf)(x); };
    } else {
        throw UsageError("grid: unknown --of '" + a.of + "' (ml_kernel|u_kernel|inversion_kernel|physical|lambert)");
    }
    std::vector<Estimate> vals(xs.size());
    par::parallel_for(xs.size(), [&](std::size_t i) { vals[i] = eval(xs[i]); });
    out.result["points"] = fmt_int(static_cast<long long>(xs.size()));
    out.table.push_back({"x", "value", "err_estimate"});
    for (std::size_t i = 0; i < xs.size(); ++i) out.table.push_back({fmt(xs[i]), fmt(vals[i].value), fmt(vals[i].abs_error)});
    return out;
}

}  // namespace rmt::cli
