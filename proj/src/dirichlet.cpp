#include "rmt/dirichlet.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <mutex>

#include "rmt/arith.hpp"
#include "rmt/parallel.hpp"
#include "rmt/quad.hpp"
#include "rmt/specfun.hpp"

namespace rmt::dirichlet {

namespace sf = rmt::specfun;
using arith::Fn;

namespace {

constexpr std::array<const char*, 11> kNames{"R1", "R2", "R3", "R4", "R5", "R6",
                                             "R7", "R8", "R9", "R10", "R11"};

constexpr double kEulerGamma = 0.57721566490153286061;

// ln n for n ≤ N, grown on demand and shared across identities.
const double* log_table(std::size_t n) {
    static std::mutex mu;
    static std::vector<double> table{0.0};
    std::lock_guard<std::mutex> lock(mu);
    if (table.size() <= n) {
        const std::size_t old = table.size();
        table.resize(n + 1);
        for (std::size_t k = old; k <= n; ++k) table[k] = std::log(static_cast<double>(k));
    }
    return table.data();
}

// log of a majorant for |σ_a(n)|, valid for n > 1260: |σ_a(n)| ≤ n^{max(Re a,0)} G(n), where G
// bounds σ_{-|Re a|}(n): ζ(β) for β > 1, Robin's σ(n)/n ≤ e^γ lnln n + 0.6483/lnln n at β = 1,
// and d(n) ≤ √n otherwise.
double log_sigma_majorant(double re_a, double lu) {
    const double beta = std::abs(re_a);
    double lg;
    if (beta > 1.0) {
        lg = std::log(sf::zeta(beta).real());
    } else if (beta == 1.0) {
        const double ll = std::log(lu);
        lg = std::log(std::exp(kEulerGamma) * ll + 0.6483 / ll);
    } else {
        lg = 0.5 * lu;
    }
    return std::max(re_a, 0.0) * lu + lg;
}

// log B(u) for a coefficient majorant |c(n)| ≤ B(n), valid for n > 1260; lu = log u.
double log_majorant(const IdentitySpec& spec, double lu) {
    switch (spec.id) {
        case Identity::R1: return log_sigma_majorant(spec.a->real(), lu) + log_sigma_majorant(spec.b->real(), lu);
        case Identity::R2: return log_sigma_majorant(spec.a->real(), lu);
        case Identity::R3:
        case Identity::R4: return 0.5 * lu;
        case Identity::R5:
        case Identity::R6:
        case Identity::R7: return 0.0;
        case Identity::R8:
        case Identity::R9:
        case Identity::R10:
        case Identity::R11: return lu;
    }
    return std::numeric_limits<double>::infinity();
}

cplx zeta_of(cplx s) { return sf::zeta(s); }

}  // namespace

std::string to_string(Identity id) { return kNames[static_cast<int>(id)]; }

Identity parse_identity(const std::string& text) {
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (text == kNames[i]) return static_cast<Identity>(i);
    throw UsageError("unknown identity '" + text + "' (expected R1..R11)");
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::verified: return "verified";
        case Verdict::inconclusive: return "inconclusive";
        case Verdict::failed: return "failed";
    }
    return "?";
}

void IdentitySpec::validate() const {
    const bool need_a = id == Identity::R1 || id == Identity::R2;
    const bool need_b = id == Identity::R1;
    if (need_a != a.has_value()) throw UsageError(to_string(id) + (need_a ? " requires a" : " does not take a"));
    if (need_b != b.has_value()) throw UsageError(to_string(id) + (need_b ? " requires b" : " does not take b"));
    if (a) require_finite(*a, "identity parameter a");
    if (b) require_finite(*b, "identity parameter b");
}

double half_plane_bound(const IdentitySpec& spec) {
    spec.validate();
    switch (spec.id) {
        case Identity::R1:
            return std::max({1.0, spec.a->real() + 1.0, spec.b->real() + 1.0, (*spec.a + *spec.b).real() + 1.0});
        case Identity::R2: return std::max(1.0, spec.a->real() + 1.0);
        case Identity::R10:
        case Identity::R11: return 2.0;
        default: return 1.0;
    }
}

cplx series_coefficient(const IdentitySpec& spec, std::uint64_t n) {
    spec.validate();
    if (n == 0) throw DomainError("series_coefficient: n must be positive");
    using arith::value_at;
    switch (spec.id) {
        case Identity::R1: return value_at(Fn::sigma, n, spec.a) * value_at(Fn::sigma, n, spec.b);
        case Identity::R2: return value_at(Fn::sigma, n, spec.a);
        case Identity::R3: return value_at(Fn::two_pow_omega, n);
        case Identity::R4: return value_at(Fn::d, n);
        case Identity::R5: return value_at(Fn::mu, n);
        case Identity::R6: return value_at(Fn::abs_mu, n);
        case Identity::R7: return value_at(Fn::lambda, n);
        case Identity::R8: return value_at(Fn::d_of_square, n);
        case Identity::R9: return value_at(Fn::d_squared, n);
        case Identity::R10: return value_at(Fn::phi, n);
        case Identity::R11: return value_at(Fn::greatest_odd, n);
    }
    return 0.0;
}

std::vector<cplx> coefficients(const IdentitySpec& spec, std::size_t N) {
    spec.validate();
    const arith::Sieve sieve(N);
    auto table = [&](Fn fn, std::optional<cplx> a = std::nullopt) { return arith::build_table(sieve, fn, N, a); };
    std::vector<cplx> c(N + 1, 0.0);
    auto copy = [&](const arith::ArithTable& t) {
        for (std::size_t n = 1; n <= N; ++n) c[n] = t[n];
    };
    switch (spec.id) {
        case Identity::R1: {
            const auto ta = table(Fn::sigma, spec.a);
            const auto tb = table(Fn::sigma, spec.b);
            for (std::size_t n = 1; n <= N; ++n) c[n] = ta[n] * tb[n];
            break;
        }
        case Identity::R2: copy(table(Fn::sigma, spec.a)); break;
        case Identity::R3: copy(table(Fn::two_pow_omega)); break;
        case Identity::R4: copy(table(Fn::d)); break;
        case Identity::R5: copy(table(Fn::mu)); break;
        case Identity::R6: copy(table(Fn::abs_mu)); break;
        case Identity::R7: copy(table(Fn::lambda)); break;
        case Identity::R8: copy(table(Fn::d_of_square)); break;
        case Identity::R9: copy(table(Fn::d_squared)); break;
        case Identity::R10: copy(table(Fn::phi)); break;
        case Identity::R11: copy(table(Fn::greatest_odd)); break;
    }
    return c;
}

cplx lhs_closed_form(const IdentitySpec& spec, cplx s) {
    require_finite(s, "lhs_closed_form");
    const double bound = half_plane_bound(spec);
    if (!(s.real() > bound))
        throw DomainError(to_string(spec.id) + ": requires Re s > " + std::to_string(bound));
    const cplx z = zeta_of(s);
    switch (spec.id) {
        case Identity::R1: {
            const cplx a = *spec.a, b = *spec.b;
            return z * zeta_of(s - a) * zeta_of(s - b) * zeta_of(s - a - b) / zeta_of(2.0 * s - a - b);
        }
        case Identity::R2: return z * zeta_of(s - *spec.a);
        case Identity::R3: return z * z / zeta_of(2.0 * s);
        case Identity::R4: return z * z;
        case Identity::R5: return 1.0 / z;
        case Identity::R6: return z / zeta_of(2.0 * s);
        case Identity::R7: return zeta_of(2.0 * s) / z;
        case Identity::R8: return z * z * z / zeta_of(2.0 * s);
        case Identity::R9: return z * z * z * z / zeta_of(2.0 * s);
        case Identity::R10: return zeta_of(s - 1.0) / z;
        case Identity::R11: {
            const cplx num = 1.0 - std::exp((1.0 - s) * kLn2);
            const cplx den = 1.0 - std::exp(-s * kLn2);
            return num / den * zeta_of(s - 1.0);
        }
    }
    return 0.0;
}

double tail_bound(const IdentitySpec& spec, double sigma, std::size_t N) {
    spec.validate();
    // The majorants hold for n > 1260; below that the table itself is summed exactly,
    // so callers never need the bound there, but small N falls back to the first safe index.
    const double start = std::max<double>(static_cast<double>(N), 1260.0);
    if (static_cast<double>(N) < start) return std::numeric_limits<double>::infinity();
    // ∫_N^∞ B(u) u^{-σ} du with u = N e^y
    const double ls = std::log(start);
    auto log_term = [&](double lu) { return log_majorant(spec, lu) + (1.0 - sigma) * lu; };
    auto g = [&](double y) { return cplx(std::exp(log_term(ls + y)), 0.0); };
    // a majorant integrand that has not decayed far out means the bound is useless
    if (log_term(ls + 200.0) > log_term(ls) - 30.0) return std::numeric_limits<double>::infinity();
    try {
        return quad::integrate_halfline(g, 1e-8).value.real();
    } catch (const ConvergenceError&) {
        return std::numeric_limits<double>::infinity();
    }
}

cplx partial_sum(const std::vector<cplx>& c, cplx s) {
    if (c.size() < 2) return 0.0;
    const std::size_t N = c.size() - 1;
    const double* ln = log_table(N);
    if (s.imag() == 0.0) {
        const double sr = s.real();
        return par::ordered_sum<cplx>(N, [&](std::size_t i) { return c[i + 1] * std::exp(-sr * ln[i + 1]); });
    }
    return par::ordered_sum<cplx>(N, [&](std::size_t i) { return c[i + 1] * std::exp(-s * ln[i + 1]); });
}

cplx partial_sum_serial(const std::vector<cplx>& c, cplx s) {
    cplx acc = 0.0;
    for (std::size_t n = 1; n < c.size(); ++n) acc += c[n] * std::exp(-s * std::log(static_cast<double>(n)));
    return acc;
}

VerificationReport verify(const IdentitySpec& spec, cplx s, std::size_t N, double tol) {
    spec.validate();
    require_finite(s, "verify");
    if (N == 0) throw DomainError("verify: N must be positive");
    const double bound = half_plane_bound(spec);
    if (!(s.real() >= bound + 0.5))
        throw DomainError(to_string(spec.id) + ": verification requires Re s >= " + std::to_string(bound + 0.5) +
                          " (half-plane Re s > " + std::to_string(bound) + " plus margin 0.5)");
    VerificationReport r;
    r.identity = spec;
    r.s = s;
    r.N = N;
    r.tolerance = tol;
    r.lhs = lhs_closed_form(spec, s);
    r.rhs_partial = partial_sum(coefficients(spec, N), s);
    r.abs_residual = std::abs(r.lhs - r.rhs_partial);
    r.rel_residual = r.abs_residual / std::abs(r.lhs);
    r.tail_estimate = tail_bound(spec, s.real(), N);
    const double noise = 1e-14 * std::max(1.0, std::abs(r.lhs));
    if (r.abs_residual > std::max(tol, r.tail_estimate) + noise)
        r.verdict = Verdict::failed;
    else if (r.tail_estimate > tol)
        r.verdict = Verdict::inconclusive;
    else
        r.verdict = Verdict::verified;
    return r;
}

}  // namespace rmt::dirichlet
