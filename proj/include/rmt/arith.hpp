#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rmt/core.hpp"

namespace rmt::arith {

enum class Fn {
    mu,
    abs_mu,
    lambda,
    phi,
    d,
    d_of_square,
    d_squared,
    omega,
    two_pow_omega,
    sigma,
    greatest_odd,
};

std::string to_string(Fn fn);
Fn parse_fn(const std::string& name);

inline constexpr std::size_t kMaxTableSize = 100'000'000;

// Smallest-prime-factor sieve on 1..N plus, for every n, the full power of
// spf(n) dividing n. Any multiplicative function follows from one pass.
class Sieve {
public:
    explicit Sieve(std::size_t n);

    std::size_t size() const { return n_; }
    std::uint32_t spf(std::size_t n) const { return spf_[n]; }
    std::uint32_t spf_power(std::size_t n) const { return pe_[n]; }
    std::uint8_t spf_exponent(std::size_t n) const { return e_[n]; }
    const std::vector<std::uint32_t>& primes() const { return primes_; }

private:
    std::size_t n_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> pe_;
    std::vector<std::uint8_t> e_;
    std::vector<std::uint32_t> primes_;
};

class ArithTable {
public:
    Fn fn() const { return fn_; }
    std::size_t size() const { return n_; }
    std::optional<cplx> param_a() const { return a_; }
    bool integral() const { return !ints_.empty(); }

    // 1-based access.
    cplx operator[](std::size_t n) const {
        return integral() ? cplx(static_cast<double>(ints_[n]), 0.0) : vals_[n];
    }
    std::int64_t integer(std::size_t n) const;

    friend ArithTable build_table(const Sieve&, Fn, std::size_t, std::optional<cplx>);

private:
    Fn fn_ = Fn::mu;
    std::size_t n_ = 0;
    std::optional<cplx> a_;
    std::vector<std::int64_t> ints_;
    std::vector<cplx> vals_;
};

ArithTable build_table(const Sieve& sieve, Fn fn, std::size_t n, std::optional<cplx> a = std::nullopt);
ArithTable build_table(Fn fn, std::size_t n, std::optional<cplx> a = std::nullopt);

// Canonical factorization by trial division, primes ascending.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

// Single value from a factorization; used for spot checks and isolated coefficients.
cplx value_at(Fn fn, std::uint64_t n, std::optional<cplx> a = std::nullopt);

}  // namespace rmt::arith
