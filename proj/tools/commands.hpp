#pragma once

#include <optional>
#include <string>

#include "cli_support.hpp"

namespace rmt::cli {

struct ArithArgs {
    std::string fn;
    long long max = 0;
    std::optional<std::string> a;
};

struct SpecfunArgs {
    std::string fn;
    std::string args;
};

struct VerifyArgs {
    std::string identity;
    std::string s;
    std::optional<std::string> a;
    std::optional<std::string> b;
};

struct TransformArgs {
    std::string kind;
    std::string f = "exp";
    double x = 1.0;
};

struct InvertArgs {
    std::string kind;
    std::string f = "exp";
    std::string series = "unit";
    std::string lambert = "bose";
    int k = 8;
    double x = 1.0;
};

struct KltArgs {
    std::string op;
    double tau = 1.0;
    double x = 1.0;
    std::string method = "all";
    std::string s = "3";
    double u = 0.0;
    std::optional<double> tau_max;  // invert: 12, cosine: 24
    long long kernel_n = 1000;
};

struct KernelArgs {
    int k = 0;
    int m = 0;
    double x = 1.0;
    std::string method = "both";
};

struct SalemArgs {
    std::optional<std::string> check;
    bool residual = false;
    std::string f = "one";
    double delta = 0.75;
    double x = 1.0;
    std::string mode = "double";
    std::string s = "2";
    int k = 0;
    int m = 0;
};

struct GridArgs {
    std::string of;
    std::optional<std::string> logspace;
    std::optional<std::string> linspace;
    std::optional<std::string> points;
    double tau = 0.0;
    int k = 0;
    int m = 0;
    std::string f = "exp";
    std::string lambert = "bose";
};

Outcome run_arith(const Context& ctx, const ArithArgs& a);
Outcome run_specfun(const Context& ctx, const SpecfunArgs& a);
Outcome run_verify(const Context& ctx, const VerifyArgs& a);
Outcome run_transform(const Context& ctx, const TransformArgs& a);
Outcome run_invert(const Context& ctx, const InvertArgs& a);
Outcome run_klt(const Context& ctx, const KltArgs& a);
Outcome run_kernel(const Context& ctx, const KernelArgs& a);
Outcome run_salem(const Context& ctx, const SalemArgs& a);
Outcome run_grid(const Context& ctx, const GridArgs& a);

inline constexpr std::size_t kMaxGridPoints = 100'000;
inline constexpr long long kMaxArithRows = 10'000'000;

}  // namespace rmt::cli
