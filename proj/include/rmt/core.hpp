#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace rmt {

using cplx = std::complex<double>;

// Argument outside the mathematical domain of an operation (pole, half-plane, support).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A quadrature or series failed to reach its tolerance within the configured budget.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed request: bad identifiers, inconsistent optional parameters.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Estimate {
    double value = 0.0;
    double abs_error = 0.0;
};

struct CEstimate {
    cplx value{0.0, 0.0};
    double abs_error = 0.0;
};

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kLn2 = 0.69314718055994530942;

inline void require_finite(cplx s, const char* what) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw DomainError(std::string(what) + ": non-finite complex argument");
}

inline void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw DomainError(std::string(what) + ": non-finite argument");
}

}  // namespace rmt
