#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rmt/core.hpp"

namespace rmt::dirichlet {

enum class Identity { R1, R2, R3, R4, R5, R6, R7, R8, R9, R10, R11 };

std::string to_string(Identity id);
Identity parse_identity(const std::string& text);

struct IdentitySpec {
    Identity id = Identity::R5;
    std::optional<cplx> a;
    std::optional<cplx> b;
    void validate() const;
};

enum class Verdict { verified, inconclusive, failed };
std::string to_string(Verdict v);

struct VerificationReport {
    IdentitySpec identity;
    cplx s;
    cplx lhs;
    cplx rhs_partial;
    std::size_t N = 0;
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    double tail_estimate = 0.0;
    double tolerance = 0.0;
    Verdict verdict = Verdict::inconclusive;
};

// Re s must exceed this for the identity to hold.
double half_plane_bound(const IdentitySpec& spec);

cplx series_coefficient(const IdentitySpec& spec, std::uint64_t n);
std::vector<cplx> coefficients(const IdentitySpec& spec, std::size_t N);
cplx lhs_closed_form(const IdentitySpec& spec, cplx s);

// Σ_{n≥N+1} |coeff(n)| n^{-Re s} from effective coefficient majorants.
double tail_bound(const IdentitySpec& spec, double sigma, std::size_t N);

VerificationReport verify(const IdentitySpec& spec, cplx s, std::size_t N, double tol = 1e-6);

// Σ_{n≤N} c[n] n^{-s}; c is 1-based (c[0] ignored). Fixed-block parallel reduction.
cplx partial_sum(const std::vector<cplx>& c, cplx s);
// Serial left-to-right reference for the same sum.
cplx partial_sum_serial(const std::vector<cplx>& c, cplx s);

}  // namespace rmt::dirichlet
