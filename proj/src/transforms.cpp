#include "rmt/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>

#include "rmt/arith.hpp"
#include "rmt/parallel.hpp"
#include "rmt/specfun.hpp"

namespace rmt::transforms {

using mellin::MellinPair;
using specfun::zeta;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();

const std::map<std::string, Weight>& weight_names() {
    static const std::map<std::string, Weight> m{
        {"unit", Weight::unit},     {"alternating", Weight::alternating},
        {"dyadic", Weight::dyadic}, {"mu", Weight::mu},
        {"abs_mu", Weight::abs_mu}, {"lambda", Weight::lambda},
        {"two_pow_omega", Weight::two_pow_omega}, {"d", Weight::d},
        {"d_of_square", Weight::d_of_square},     {"d_squared", Weight::d_squared},
        {"phi", Weight::phi},       {"k_mu", Weight::k_mu},
        {"sigma", Weight::sigma},   {"pow_mu", Weight::pow_mu},
    };
    return m;
}

bool takes_param(Weight w) { return w == Weight::sigma || w == Weight::pow_mu; }

double zr(double c) { return zeta(cplx(c, 0.0)).real(); }

// |c(n)| ≤ C n^β for every n ≥ 1.
struct Majorant {
    double C;
    double beta;
};

Majorant majorant(const CoeffTransform& t) {
    const double ra = t.a.real();
    switch (t.weight) {
        case Weight::unit:
        case Weight::alternating:
        case Weight::mu:
        case Weight::abs_mu:
        case Weight::lambda:
            return {1.0, 0.0};
        case Weight::d:
        case Weight::two_pow_omega:  // 2^ω ≤ d ≤ √(3n)
            return {std::sqrt(3.0), 0.5};
        case Weight::d_of_square:  // d(n²) ≤ d(n)²
        case Weight::d_squared:
            return {3.0, 1.0};
        case Weight::phi:
        case Weight::k_mu:
            return {1.0, 1.0};
        case Weight::pow_mu:
            return {1.0, ra};
        case Weight::sigma:
            return {std::sqrt(3.0), std::max(ra, 0.0) + 0.5};
        case Weight::dyadic:
            break;
    }
    return {1.0, 0.0};
}

arith::Fn table_fn(Weight w) {
    switch (w) {
        case Weight::mu:
        case Weight::k_mu:
        case Weight::pow_mu:
            return arith::Fn::mu;
        case Weight::abs_mu: return arith::Fn::abs_mu;
        case Weight::lambda: return arith::Fn::lambda;
        case Weight::two_pow_omega: return arith::Fn::two_pow_omega;
        case Weight::d: return arith::Fn::d;
        case Weight::d_of_square: return arith::Fn::d_of_square;
        case Weight::d_squared: return arith::Fn::d_squared;
        case Weight::phi: return arith::Fn::phi;
        case Weight::sigma: return arith::Fn::sigma;
        default: break;
    }
    throw UsageError("table_fn: weight has no arithmetic table");
}

// Coefficients c(1..M), 1-based; index 0 unused.
std::vector<cplx> weight_values(const CoeffTransform& t, const arith::Sieve& sieve, std::size_t M) {
    std::vector<cplx> c(M + 1, cplx(0.0, 0.0));
    switch (t.weight) {
        case Weight::unit:
            for (std::size_t n = 1; n <= M; ++n) c[n] = 1.0;
            return c;
        case Weight::alternating:
            for (std::size_t n = 1; n <= M; ++n) c[n] = (n % 2 == 1) ? 1.0 : -1.0;
            return c;
        case Weight::dyadic:
            throw UsageError("weight_values: dyadic weight is not index-additive");
        default:
            break;
    }
    const auto table = t.weight == Weight::sigma ? arith::build_table(sieve, arith::Fn::sigma, M, t.a)
                                                 : arith::build_table(sieve, table_fn(t.weight), M);
    for (std::size_t n = 1; n <= M; ++n) {
        cplx v = table[n];
        if (t.weight == Weight::k_mu) v *= static_cast<double>(n);
        if (t.weight == Weight::pow_mu && v != 0.0) v *= std::exp(t.a * std::log(static_cast<double>(n)));
        c[n] = v;
    }
    return c;
}

void require_abscissa(const TransformChain& chain, double c0) {
    for (const auto& t : chain)
        if (!(c0 > t.abscissa()))
            throw DomainError("abscissa violation: c0 = " + std::to_string(c0) + " must exceed " +
                              std::to_string(t.abscissa()) + " for weight " + t.name());
}

}  // namespace

ScaleMode CoeffTransform::mode() const {
    if (weight == Weight::alternating) return ScaleMode::alternating;
    if (weight == Weight::dyadic) return ScaleMode::dyadic;
    return ScaleMode::plain;
}

std::string CoeffTransform::name() const {
    for (const auto& [k, v] : weight_names())
        if (v == weight) {
            if (!takes_param(weight)) return k;
            char buf[96];
            if (a.imag() == 0.0)
                std::snprintf(buf, sizeof buf, "%s:%.17g", k.c_str(), a.real());
            else
                std::snprintf(buf, sizeof buf, "%s:%.17g%+.17gi", k.c_str(), a.real(), a.imag());
            return buf;
        }
    return "?";
}

double CoeffTransform::abscissa() const {
    switch (weight) {
        case Weight::phi:
        case Weight::k_mu:
            return 2.0;
        case Weight::sigma:
            return std::max(1.0, a.real() + 1.0);
        case Weight::pow_mu:
            return a.real() + 1.0;
        default:
            return 1.0;
    }
}

CoeffTransform parse_transform(const std::string& text) {
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    const auto it = weight_names().find(head);
    if (it == weight_names().end()) throw UsageError("unknown transform weight '" + head + "'");
    CoeffTransform t{it->second, {0.0, 0.0}};
    if (takes_param(t.weight)) {
        if (colon == std::string::npos) throw UsageError("weight '" + head + "' needs a parameter, e.g. " + head + ":0.5");
        const std::string arg = text.substr(colon + 1);
        try {
            std::size_t pos = 0;
            const double re = std::stod(arg, &pos);
            double im = 0.0;
            if (pos < arg.size()) {
                std::size_t p2 = 0;
                im = std::stod(arg.substr(pos), &p2);
                if (pos + p2 + 1 != arg.size() || arg.back() != 'i') throw UsageError("bad parameter");
            }
            t.a = cplx(re, im);
        } catch (const std::logic_error&) {
            throw UsageError("cannot parse parameter '" + arg + "' of weight " + head);
        }
    } else if (colon != std::string::npos) {
        throw UsageError("weight '" + head + "' takes no parameter");
    }
    return t;
}

cplx multiplier(const CoeffTransform& t, cplx s) {
    switch (t.weight) {
        case Weight::unit: return zeta(s);
        case Weight::alternating: return specfun::eta(s);
        case Weight::dyadic: return 1.0 / (1.0 - std::exp((1.0 - s) * kLn2));
        case Weight::mu: return 1.0 / zeta(s);
        case Weight::abs_mu: return zeta(s) / zeta(2.0 * s);
        case Weight::lambda: return zeta(2.0 * s) / zeta(s);
        case Weight::two_pow_omega: { const cplx z = zeta(s); return z * z / zeta(2.0 * s); }
        case Weight::d: { const cplx z = zeta(s); return z * z; }
        case Weight::d_of_square: { const cplx z = zeta(s); return z * z * z / zeta(2.0 * s); }
        case Weight::d_squared: { const cplx z = zeta(s); return z * z * z * z / zeta(2.0 * s); }
        case Weight::phi: return zeta(s - 1.0) / zeta(s);
        case Weight::k_mu: return 1.0 / zeta(s - 1.0);
        case Weight::sigma: return zeta(s) * zeta(s - t.a);
        case Weight::pow_mu: return 1.0 / zeta(s - t.a);
    }
    return 0.0;
}

quad::ComplexFn mellin_side(const CoeffTransform& t) {
    return [t](cplx s) { return multiplier(t, s); };
}

cplx chain_multiplier(const TransformChain& chain, cplx s) {
    cplx m(1.0, 0.0);
    for (const auto& t : chain) m *= multiplier(t, s);
    return m;
}

std::optional<TransformChain> inverse_chain(const CoeffTransform& t) {
    auto w = [](Weight x) { return CoeffTransform{x, {0.0, 0.0}}; };
    switch (t.weight) {
        case Weight::unit: return TransformChain{w(Weight::mu)};
        case Weight::mu: return TransformChain{w(Weight::unit)};
        case Weight::alternating: return TransformChain{w(Weight::dyadic), w(Weight::mu)};
        case Weight::lambda: return TransformChain{w(Weight::abs_mu)};
        case Weight::abs_mu: return TransformChain{w(Weight::lambda)};
        case Weight::d: return TransformChain{w(Weight::mu), w(Weight::mu)};
        case Weight::two_pow_omega: return TransformChain{w(Weight::lambda), w(Weight::mu)};
        case Weight::d_of_square: return TransformChain{w(Weight::mu), w(Weight::mu), w(Weight::lambda)};
        case Weight::d_squared:
            return TransformChain{w(Weight::mu), w(Weight::mu), w(Weight::mu), w(Weight::lambda)};
        case Weight::phi: return TransformChain{w(Weight::k_mu), w(Weight::unit)};
        case Weight::sigma: return TransformChain{CoeffTransform{Weight::pow_mu, t.a}, w(Weight::mu)};
        default: return std::nullopt;
    }
}

double abs_series(const CoeffTransform& t, double c) {
    if (!(c > t.abscissa())) return kInf;
    const double ra = t.a.real();
    switch (t.weight) {
        case Weight::unit:
        case Weight::alternating:
        case Weight::lambda:
            return zr(c);
        case Weight::dyadic: return 1.0 / (1.0 - std::exp2(1.0 - c));
        case Weight::mu:
        case Weight::abs_mu:
            return zr(c) / zr(2.0 * c);
        case Weight::d: return zr(c) * zr(c);
        case Weight::two_pow_omega: return zr(c) * zr(c) / zr(2.0 * c);
        case Weight::d_of_square: return std::pow(zr(c), 3) / zr(2.0 * c);
        case Weight::d_squared: return std::pow(zr(c), 4) / zr(2.0 * c);
        case Weight::phi: return zr(c - 1.0) / zr(c);
        case Weight::k_mu: return zr(c - 1.0) / zr(2.0 * c - 2.0);
        // |σ_a(n)| ≤ σ_{Re a}(n).
        case Weight::sigma: return zr(c) * zr(c - ra);
        case Weight::pow_mu: return zr(c - ra) / zr(2.0 * (c - ra));
    }
    return kInf;
}

double abs_series_tail(const CoeffTransform& t, double c, std::size_t N) {
    const double n = static_cast<double>(N);
    if (t.weight == Weight::dyadic) {
        if (!(c > 1.0)) return kInf;
        return std::exp2((n + 1.0) * (1.0 - c)) / (1.0 - std::exp2(1.0 - c));
    }
    const auto [C, beta] = majorant(t);
    const double e = c - beta - 1.0;
    if (!(e > 0.0)) return kInf;
    // Σ_{n>N} C n^{β-c} ≤ C ∫_N^∞ u^{β-c} du.
    return C * std::exp(-e * std::log(n)) / e;
}

std::vector<cplx> chain_coefficients(const TransformChain& chain, std::size_t N, std::size_t J) {
    if (N == 0 || J == 0) throw DomainError("chain_coefficients: N and J must be positive");
    std::vector<cplx> C(J + 1, cplx(0.0, 0.0));
    C[1] = 1.0;
    const std::size_t M = std::min(N, J);
    const arith::Sieve sieve(M);
    for (const auto& t : chain) {
        std::vector<cplx> next(J + 1, cplx(0.0, 0.0));
        if (t.weight == Weight::dyadic) {
            for (std::size_t j = 1; j <= J; ++j) {
                if (C[j] == 0.0) continue;
                std::size_t p = 1;
                for (std::size_t k = 0; k <= N && j * p <= J; ++k, p *= 2) {
                    next[j * p] += C[j] * static_cast<double>(p);
                    if (p > J) break;
                }
            }
        } else {
            const auto w = weight_values(t, sieve, M);
            for (std::size_t j = 1; j <= J; ++j) {
                if (C[j] == 0.0) continue;
                const std::size_t top = std::min(M, J / j);
                for (std::size_t n = 1; n <= top; ++n)
                    if (w[n] != 0.0) next[j * n] += C[j] * w[n];
            }
        }
        C.swap(next);
    }
    return C;
}

SeriesResult apply_chain(const TransformChain& chain, const MellinPair& fp, double x, std::size_t N,
                         const SeriesOptions& opt) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("apply_chain: x must be positive");
    if (N == 0) throw DomainError("apply_chain: N must be positive");
    if (chain.empty()) throw UsageError("apply_chain: empty chain");
    const double c0 = fp.c0();
    require_abscissa(chain, c0);

    SeriesResult out;
    out.N = N;
    if (fp.is_zero()) return out;

    // ||f||_c for several abscissae; |f(y)| ≤ ||f||_c y^{-c}.
    struct Level {
        double c;
        double norm;
    };
    std::vector<Level> levels;
    for (double dc : {0.0, 2.0, 4.0, 8.0}) {
        const double c = c0 + dc;
        if (dc > 0.0 && !(c < fp.strip().hi - 0.25)) continue;
        try {
            const auto nr = mellin::m_norm(fp.with_c0(c), opt.contour, 1e-8);
            levels.push_back({c, nr.value + nr.abs_error});
        } catch (const ConvergenceError&) {
            if (dc == 0.0) throw;
        }
    }

    // Tuples with some index above N, telescoped against closed-form absolute sums.
    out.index_tail = kInf;
    for (const auto& lv : levels) {
        double tail = 0.0;
        for (std::size_t i = 0; i < chain.size(); ++i) {
            double term = abs_series_tail(chain[i], lv.c, N);
            for (std::size_t j = 0; j < chain.size(); ++j)
                if (j != i) term *= abs_series(chain[j], lv.c);
            tail += term;
        }
        out.index_tail = std::min(out.index_tail, lv.norm * std::exp(-lv.c * std::log(x)) * tail);
    }

    // All indices ≤ N gives a finite lattice; beyond J the dropped products obey
    // Σ_{j>J} |C(j)| |f(xj)| ≤ ||f||_c x^{-c} J^{-(c-c0)} Π A(c0).
    double full = 1.0;
    for (const auto& t : chain) {
        const double span = t.weight == Weight::dyadic ? std::exp2(std::min<double>(N, 62.0)) : double(N);
        full *= span;
        full = std::min(full, 1e18);
    }
    double prodA0 = 1.0;
    for (const auto& t : chain) prodA0 *= abs_series(t, c0);
    const double target = 1e-17;
    double J = std::min(full, static_cast<double>(opt.max_lattice));
    for (const auto& lv : levels) {
        if (lv.c <= c0) continue;
        const double lead = lv.norm * std::exp(-lv.c * std::log(x)) * prodA0;
        const double need = std::exp(std::log(std::max(lead / target, 1.0)) / (lv.c - c0));
        J = std::min(J, std::ceil(need));
    }
    J = std::max(J, 1.0);
    out.J = static_cast<std::size_t>(J);
    if (J < full) {
        out.lattice_cut = kInf;
        for (const auto& lv : levels) {
            if (lv.c <= c0) continue;
            out.lattice_cut = std::min(out.lattice_cut, lv.norm * std::exp(-lv.c * std::log(x)) *
                                                            std::exp(-(lv.c - c0) * std::log(J)) * prodA0);
        }
    }

    const auto C = chain_coefficients(chain, N, out.J);
    std::vector<std::size_t> idx;
    for (std::size_t j = 1; j <= out.J; ++j)
        if (C[j] != 0.0) idx.push_back(j);
    out.terms = idx.size();

    const mellin::PhysicalFunction f(fp, opt.contour, opt.tol);
    const double lx = std::log(x);
    std::vector<Estimate> fv(idx.size());
    par::parallel_for(idx.size(), [&](std::size_t i) { fv[i] = f.at_log(lx + std::log(double(idx[i]))); });

    out.value = par::ordered_sum<cplx>(idx.size(), [&](std::size_t i) { return C[idx[i]] * fv[i].value; });
    const double err = par::ordered_sum<double>(idx.size(), [&](std::size_t i) { return std::abs(C[idx[i]]) * fv[i].abs_error; });
    const double mag = par::ordered_sum<double>(idx.size(), [&](std::size_t i) { return std::abs(C[idx[i]] * fv[i].value); });
    // Blocked summation: each partial carries ≤ kBlock roundings, the reduction ≤ one per block.
    const double rounding = (double(par::kBlock) + double(idx.size()) / par::kBlock + 4.0) * kEps * mag;
    out.quad_error = err + rounding;
    out.error_bound = out.index_tail + out.lattice_cut + out.quad_error;
    return out;
}

SeriesResult apply_series(const CoeffTransform& t, const MellinPair& fp, double x, std::size_t N,
                          const SeriesOptions& opt) {
    return apply_chain(TransformChain{t}, fp, x, N, opt);
}

MellinPair transformed_pair(const TransformChain& chain, const MellinPair& fp) {
    double lo = fp.strip().lo;
    std::string label = fp.label();
    for (const auto& t : chain) {
        lo = std::max(lo, t.abscissa());
        label = t.name() + "(" + label + ")";
    }
    require_abscissa(chain, fp.c0());
    if (fp.is_zero()) return MellinPair::zero(fp.c0());
    auto f = fp.evaluator();
    return MellinPair([chain, f](cplx s) { return chain_multiplier(chain, s) * f(s); }, fp.c0(), label,
                      {lo, fp.strip().hi});
}

namespace {

const std::vector<std::pair<std::string, Expansion>>& expansion_names() {
    static const std::vector<std::pair<std::string, Expansion>> v{
        {"E2_1", Expansion::E2_1},   {"E2_2", Expansion::E2_2},   {"E2_3", Expansion::E2_3},
        {"E2_4", Expansion::E2_4},   {"E2_5", Expansion::E2_5},   {"T2_1", Expansion::T2_1},
        {"T2_2", Expansion::T2_2},   {"T2_3", Expansion::T2_3},   {"T2_4", Expansion::T2_4},
        {"T2_5", Expansion::T2_5},   {"T2_6", Expansion::T2_6},   {"T2_7", Expansion::T2_7},
        {"T2_8", Expansion::T2_8},   {"T2_9", Expansion::T2_9},   {"T2_10", Expansion::T2_10},
        {"T2_11", Expansion::T2_11}, {"T2_12", Expansion::T2_12}, {"T2_13", Expansion::T2_13},
        {"T2_14", Expansion::T2_14},
    };
    return v;
}

}  // namespace

std::string to_string(Expansion e) {
    for (const auto& [k, v] : expansion_names())
        if (v == e) return k;
    return "?";
}

Expansion parse_expansion(const std::string& text) {
    for (const auto& [k, v] : expansion_names())
        if (k == text) return v;
    throw UsageError("unknown expansion '" + text + "'");
}

TransformChain expansion_chain(Expansion e, cplx a) {
    auto w = [](Weight x) { return CoeffTransform{x, {0.0, 0.0}}; };
    const CoeffTransform mu = w(Weight::mu), unit = w(Weight::unit), alt = w(Weight::alternating),
                         dy = w(Weight::dyadic), amu = w(Weight::abs_mu), lam = w(Weight::lambda),
                         tpo = w(Weight::two_pow_omega), d = w(Weight::d), dsq = w(Weight::d_of_square),
                         d2 = w(Weight::d_squared), phi = w(Weight::phi), kmu = w(Weight::k_mu);
    const CoeffTransform sig{Weight::sigma, a}, pmu{Weight::pow_mu, a};
    switch (e) {
        case Expansion::E2_1: return {mu, unit};
        case Expansion::E2_2: return {unit, mu};
        case Expansion::E2_3: return {dy, mu, alt};
        case Expansion::E2_4: return {alt, dy, mu};
        case Expansion::E2_5: return {mu, alt};
        case Expansion::T2_1: return {amu, lam};
        case Expansion::T2_2: return {lam, amu};
        case Expansion::T2_3: return {mu, lam, tpo};
        case Expansion::T2_4: return {tpo, lam, mu};
        case Expansion::T2_5: return {mu, mu, d};
        case Expansion::T2_6: return {d, mu, mu};
        case Expansion::T2_7: return {mu, mu, lam, dsq};
        case Expansion::T2_8: return {dsq, lam, mu, mu};
        case Expansion::T2_9: return {mu, mu, mu, lam, d2};
        case Expansion::T2_10: return {d2, lam, mu, mu, mu};
        case Expansion::T2_11: return {kmu, unit, phi};
        case Expansion::T2_12: return {phi, unit, kmu};
        case Expansion::T2_13: return {pmu, mu, sig};
        case Expansion::T2_14: return {sig, pmu, mu};
    }
    return {};
}

ExpansionReport check_expansion(Expansion e, const MellinPair& fp, double x, std::size_t N,
                                const SeriesOptions& opt, cplx a) {
    ExpansionReport rep;
    rep.id = e;
    rep.x = x;
    rep.series = apply_chain(expansion_chain(e, a), fp, x, N, opt);
    rep.nested = rep.series.value;
    const mellin::PhysicalFunction f(fp, opt.contour, opt.tol);
    Estimate t = f(x);
    if (e == Expansion::E2_5) {
        const Estimate t2 = f(2.0 * x);
        t = {t.value - 2.0 * t2.value, t.abs_error + 2.0 * t2.abs_error};
    }
    rep.target = t.value;
    rep.residual = std::abs(rep.target - rep.nested);
    rep.tail_bound = rep.series.error_bound + t.abs_error + 4.0 * kEps * std::abs(rep.target);
    rep.within_bound = rep.residual <= rep.tail_bound;
    rep.inconclusive = rep.tail_bound > std::max(1e-6, 1e-6 * std::abs(rep.target));
    return rep;
}

NormInequalityReport norm_inequality_check(const CoeffTransform& t, const MellinPair& fp,
                                           const quad::ContourSpec& spec, double tol) {
    const double c = fp.c0();
    require_abscissa({t}, c);
    const double z = zr(c);
    double L = 0.0, U = 0.0;
    switch (t.weight) {
        case Weight::unit: L = 1.0 / z; U = z; break;
        case Weight::alternating: L = 1.0 / z; U = z / (1.0 - std::exp2(1.0 - c)); break;
        case Weight::lambda: L = 1.0 / z; U = z / zr(2.0 * c); break;
        case Weight::two_pow_omega: L = zr(2.0 * c) / (z * z); U = z * z; break;
        case Weight::d: L = 1.0 / (z * z); U = z * z; break;
        case Weight::d_of_square: L = std::pow(z, -3); U = z * z * z * zr(2.0 * c); break;
        case Weight::d_squared: L = std::pow(z, -4); U = std::pow(z, 4) * zr(2.0 * c); break;
        case Weight::phi: { const double p = z * zr(c - 1.0); L = 1.0 / p; U = p; break; }
        case Weight::sigma: { const double p = z * zr(c - t.a.real()); L = 1.0 / p; U = p; break; }
        default:
            throw UsageError("norm_inequality_check: no norm inequality for weight " + t.name());
    }
    const auto nf = mellin::m_norm(fp, spec, tol);
    const auto ng = mellin::m_norm(transformed_pair({t}, fp), spec, tol);
    NormInequalityReport r;
    r.norm_f = nf.value;
    r.norm_g = ng.value;
    r.lower_const = L;
    r.upper_const = U;
    r.slack_lower = nf.value - L * ng.value;
    r.slack_upper = U * ng.value - nf.value;
    r.quad_error = nf.abs_error + std::max(L, U) * ng.abs_error;
    r.holds = r.slack_lower >= -r.quad_error && r.slack_upper >= -r.quad_error;
    return r;
}

std::string to_string(LambertKind k) { return k == LambertKind::bose ? "bose" : "fermi"; }

LambertKind parse_lambert(const std::string& text) {
    if (text == "bose") return LambertKind::bose;
    if (text == "fermi") return LambertKind::fermi;
    throw UsageError("unknown Lambert kind '" + text + "' (bose|fermi)");
}

namespace {

cplx lambert_d(LambertKind kind, cplx s) { return kind == LambertKind::bose ? zeta(s) : specfun::eta(s); }

}  // namespace

MellinPair lambert_image(LambertKind kind, const MellinPair& fp) {
    const double lo = std::max(fp.strip().lo, kind == LambertKind::bose ? 1.0 : 0.0);
    if (!(fp.c0() > lo)) throw DomainError("lambert_image: c0 must exceed " + std::to_string(lo));
    const std::string label = to_string(kind) + "(" + fp.label() + ")";
    if (fp.is_zero()) return MellinPair::zero(fp.c0());
    auto f = fp.evaluator();
    return MellinPair([kind, f](cplx s) { return lambert_d(kind, s) * specfun::gamma(s) * f(s); }, fp.c0(), label,
                      {lo, fp.strip().hi});
}

LambertReport lambert_transform(LambertKind kind, const MellinPair& fp, double x, const quad::ContourSpec& spec,
                                double tol) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("lambert_transform: x must be positive");
    LambertReport rep;
    const auto img = lambert_image(kind, fp);
    const auto c = mellin::eval(img, x, spec, tol);
    rep.contour = {c.value.real(), c.abs_error};

    // Real part integrates the transform, imaginary part the propagated error of f.
    const mellin::PhysicalFunction f(fp, spec, tol);
    auto g = [&](double t) -> cplx {
        const double r = x / t;
        if (r > 700.0) return 0.0;
        const double k = kind == LambertKind::bose ? 1.0 / (t * std::expm1(r)) : 1.0 / (t * (std::exp(r) + 1.0));
        const Estimate fv = f(t);
        return {fv.value * k, fv.abs_error * k};
    };
    const auto h = quad::integrate_halfline(g, tol);
    rep.halfline = {h.value.real(), h.abs_error_estimate + std::abs(h.value.imag())};
    rep.difference = std::abs(rep.halfline.value - rep.contour.value);
    return rep;
}

Estimate widder_approximant(const MellinPair& image, LambertKind kind, int k, double x, const quad::ContourSpec& spec,
                            double tol) {
    if (k < 1) throw DomainError("widder_approximant: k must be a positive integer");
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("widder_approximant: x must be positive");
    auto g = image.evaluator();
    const double lk = std::log(double(k));
    auto h = [g, kind, k, lk](cplx s) {
        cplx p = s;
        for (int j = 1; j <= k; ++j) p *= 1.0 + s / double(j);
        return p * std::exp(-s * lk) * g(s) / lambert_d(kind, s);
    };
    const MellinPair fk(h, image.c0(), "widder", image.strip());
    const auto r = mellin::eval(fk, x, spec, tol);
    return {r.value.real(), r.abs_error};
}

}  // namespace rmt::transforms
