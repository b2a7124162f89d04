#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rmt/mellin.hpp"
#include "rmt/quad.hpp"

namespace rmt::transforms {

enum class Weight {
    unit,
    alternating,
    dyadic,
    mu,
    abs_mu,
    lambda,
    two_pow_omega,
    d,
    d_of_square,
    d_squared,
    phi,
    k_mu,     // k·μ(k)
    sigma,    // σ_a(n)
    pow_mu,   // n^a·μ(n)
};

enum class ScaleMode { plain, alternating, dyadic };

// One coefficient-weighted series  g(x) = Σ_n c(n) f(x n)  (dyadic: Σ_k 2^k f(x 2^k)).
struct CoeffTransform {
    Weight weight = Weight::unit;
    cplx a{0.0, 0.0};  // exponent for sigma and pow_mu

    ScaleMode mode() const;
    std::string name() const;
    // Re s must exceed this for the multiplier series to converge absolutely.
    double abscissa() const;
};

CoeffTransform parse_transform(const std::string& text);

// Applied rightmost-first; the value does not depend on order, only the lattice does.
using TransformChain = std::vector<CoeffTransform>;

// Dirichlet-series multiplier the transform applies on the Mellin side.
cplx multiplier(const CoeffTransform& t, cplx s);
quad::ComplexFn mellin_side(const CoeffTransform& t);
cplx chain_multiplier(const TransformChain& chain, cplx s);

// The inverse chain, when one exists among the weights above.
std::optional<TransformChain> inverse_chain(const CoeffTransform& t);

// Σ |c(n)| n^{-c} in closed form, and its tail beyond index N from coefficient majorants.
double abs_series(const CoeffTransform& t, double c);
double abs_series_tail(const CoeffTransform& t, double c, std::size_t N);

// Lattice coefficients of the chain on 1..J with every index ≤ N (1-based).
std::vector<cplx> chain_coefficients(const TransformChain& chain, std::size_t N, std::size_t J);

struct SeriesOptions {
    quad::ContourSpec contour;
    double tol = 1e-10;
    std::size_t max_lattice = 4'000'000;
};

struct SeriesResult {
    cplx value{0.0, 0.0};
    double index_tail = 0.0;   // tuples with some index > N
    double lattice_cut = 0.0;  // products beyond J with all indices ≤ N
    double quad_error = 0.0;   // physical-side evaluation and rounding
    double error_bound = 0.0;  // sum of the three
    std::size_t N = 0;
    std::size_t J = 0;
    std::size_t terms = 0;
};

SeriesResult apply_chain(const TransformChain& chain, const mellin::MellinPair& fp, double x, std::size_t N,
                         const SeriesOptions& opt = {});
SeriesResult apply_series(const CoeffTransform& t, const mellin::MellinPair& fp, double x, std::size_t N,
                          const SeriesOptions& opt = {});

// The transformed pair: Mellin side multiplier(s)·f*(s).
mellin::MellinPair transformed_pair(const TransformChain& chain, const mellin::MellinPair& fp);

enum class Expansion {
    E2_1, E2_2, E2_3, E2_4, E2_5,
    T2_1, T2_2, T2_3, T2_4, T2_5, T2_6, T2_7, T2_8, T2_9, T2_10, T2_11, T2_12, T2_13, T2_14,
};

std::string to_string(Expansion e);
Expansion parse_expansion(const std::string& text);
TransformChain expansion_chain(Expansion e, cplx a = 0.5);

struct ExpansionReport {
    Expansion id = Expansion::E2_1;
    double x = 0.0;
    cplx target{0.0, 0.0};
    cplx nested{0.0, 0.0};
    double residual = 0.0;
    double tail_bound = 0.0;
    bool within_bound = false;
    bool inconclusive = false;
    SeriesResult series;
};

ExpansionReport check_expansion(Expansion e, const mellin::MellinPair& fp, double x, std::size_t N,
                                const SeriesOptions& opt = {}, cplx a = 0.5);

struct NormInequalityReport {
    double norm_f = 0.0;
    double norm_g = 0.0;
    double lower_const = 0.0;  // lower_const·||g|| ≤ ||f||
    double upper_const = 0.0;  // ||f|| ≤ upper_const·||g||
    double slack_lower = 0.0;
    double slack_upper = 0.0;
    double quad_error = 0.0;
    bool holds = false;
};

NormInequalityReport norm_inequality_check(const CoeffTransform& t, const mellin::MellinPair& fp,
                                           const quad::ContourSpec& spec, double tol = 1e-6);

enum class LambertKind { bose, fermi };
std::string to_string(LambertKind k);
LambertKind parse_lambert(const std::string& text);

// D(s)Γ(s)f*(s) with D = ζ (bose) or (1-2^{1-s})ζ (fermi).
mellin::MellinPair lambert_image(LambertKind kind, const mellin::MellinPair& fp);

struct LambertReport {
    Estimate halfline;
    Estimate contour;
    double difference = 0.0;
};

LambertReport lambert_transform(LambertKind kind, const mellin::MellinPair& fp, double x,
                                const quad::ContourSpec& spec, double tol = 1e-10);

// F_k(x) = (1/2πi)∫ s k^{-s} Π_{j≤k}(1 + s/j) g*(s)/D(s) x^{-s} ds for an image pair g.
Estimate widder_approximant(const mellin::MellinPair& image, LambertKind kind, int k, double x,
                            const quad::ContourSpec& spec, double tol = 1e-10);

}  // namespace rmt::transforms
