#include "rmt/arith.hpp"

#include <array>
#include <cmath>

namespace rmt::arith {

namespace {

constexpr std::array<std::pair<Fn, const char*>, 11> kNames{{
    {Fn::mu, "mu"},
    {Fn::abs_mu, "abs_mu"},
    {Fn::lambda, "lambda"},
    {Fn::phi, "phi"},
    {Fn::d, "d"},
    {Fn::d_of_square, "d_of_square"},
    {Fn::d_squared, "d_squared"},
    {Fn::omega, "omega"},
    {Fn::two_pow_omega, "two_pow_omega"},
    {Fn::sigma, "sigma"},
    {Fn::greatest_odd, "greatest_odd"},
}};

std::int64_t ipow(std::int64_t p, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= p;
    return r;
}

// f(p^e) for the integer-valued multiplicative functions.
std::int64_t prime_power_value(Fn fn, std::int64_t p, int e) {
    switch (fn) {
        case Fn::mu: return e == 1 ? -1 : 0;
        case Fn::abs_mu: return e == 1 ? 1 : 0;
        case Fn::lambda: return (e % 2) ? -1 : 1;
        case Fn::phi: return ipow(p, e - 1) * (p - 1);
        case Fn::d: return e + 1;
        case Fn::d_of_square: return 2 * e + 1;
        case Fn::d_squared: return static_cast<std::int64_t>(e + 1) * (e + 1);
        case Fn::two_pow_omega: return 2;
        case Fn::greatest_odd: return p == 2 ? 1 : ipow(p, e);
        default: break;
    }
    throw UsageError("prime_power_value: not an integer multiplicative function");
}

// σ_a(p^e) = Σ_{j≤e} (p^j)^a, each divisor raised by exp(a log d).
cplx sigma_prime_power(std::int64_t p, int e, cplx a) {
    cplx acc = 0.0;
    const double lp = std::log(static_cast<double>(p));
    for (int j = 0; j <= e; ++j) acc += std::exp(a * (lp * j));
    return acc;
}

void check_args(Fn fn, std::size_t n, const std::optional<cplx>& a) {
    if (n == 0) throw DomainError("build_table: N must be at least 1");
    if (n > kMaxTableSize) throw DomainError("build_table: N exceeds the configured table cap");
    if (fn == Fn::sigma && !a) throw UsageError("build_table: sigma requires param_a");
    if (fn != Fn::sigma && a) throw UsageError("build_table: param_a is only accepted for sigma");
    if (a) require_finite(*a, "build_table");
}

}  // namespace

std::string to_string(Fn fn) {
    for (const auto& [f, name] : kNames)
        if (f == fn) return name;
    return "?";
}

Fn parse_fn(const std::string& name) {
    for (const auto& [f, n] : kNames)
        if (name == n) return f;
    throw UsageError("unknown arithmetic function '" + name + "'");
}

Sieve::Sieve(std::size_t n) : n_(n), spf_(n + 1, 0), pe_(n + 1, 1), e_(n + 1, 0) {
    if (n == 0) throw DomainError("Sieve: N must be at least 1");
    if (n > kMaxTableSize) throw DomainError("Sieve: N exceeds the configured table cap");
    // Linear sieve: every composite is struck once, by its smallest prime.
    for (std::size_t i = 2; i <= n; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            pe_[i] = static_cast<std::uint32_t>(i);
            e_[i] = 1;
            primes_.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : primes_) {
            const std::size_t ip = i * p;
            if (p > spf_[i] || ip > n) break;
            spf_[ip] = p;
            if (p == spf_[i]) {
                pe_[ip] = pe_[i] * p;
                e_[ip] = static_cast<std::uint8_t>(e_[i] + 1);
            } else {
                pe_[ip] = p;
                e_[ip] = 1;
            }
        }
    }
}

ArithTable build_table(const Sieve& sieve, Fn fn, std::size_t n, std::optional<cplx> a) {
    check_args(fn, n, a);
    if (n > sieve.size()) throw DomainError("build_table: sieve smaller than requested N");
    ArithTable t;
    t.fn_ = fn;
    t.n_ = n;
    t.a_ = a;
    if (fn == Fn::sigma) {
        t.vals_.assign(n + 1, cplx(0.0, 0.0));
        t.vals_[1] = 1.0;
        for (std::size_t i = 2; i <= n; ++i) {
            const std::uint32_t q = sieve.spf_power(i);
            t.vals_[i] = sigma_prime_power(sieve.spf(i), sieve.spf_exponent(i), *a) * t.vals_[i / q];
        }
        return t;
    }
    t.ints_.assign(n + 1, 0);
    t.ints_[1] = fn == Fn::omega ? 0 : 1;
    for (std::size_t i = 2; i <= n; ++i) {
        const std::uint32_t q = sieve.spf_power(i);
        const std::int64_t rest = t.ints_[i / q];
        if (fn == Fn::omega)
            t.ints_[i] = rest + 1;
        else
            t.ints_[i] = prime_power_value(fn, sieve.spf(i), sieve.spf_exponent(i)) * rest;
    }
    return t;
}

ArithTable build_table(Fn fn, std::size_t n, std::optional<cplx> a) {
    check_args(fn, n, a);
    Sieve s(n);
    return build_table(s, fn, n, a);
}

std::int64_t ArithTable::integer(std::size_t n) const {
    if (!integral()) throw UsageError("ArithTable::integer: table is not integer valued");
    return ints_[n];
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    if (n == 0) throw DomainError("factorize: n must be positive");
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

cplx value_at(Fn fn, std::uint64_t n, std::optional<cplx> a) {
    check_args(fn, 1, a);
    const auto fac = factorize(n);
    if (fn == Fn::omega) return static_cast<double>(fac.size());
    if (fn == Fn::sigma) {
        cplx r = 1.0;
        for (auto [p, e] : fac) r *= sigma_prime_power(static_cast<std::int64_t>(p), e, *a);
        return r;
    }
    std::int64_t r = 1;
    for (auto [p, e] : fac) r *= prime_power_value(fn, static_cast<std::int64_t>(p), e);
    return static_cast<double>(r);
}

}  // namespace rmt::arith
