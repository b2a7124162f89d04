#include <doctest.h>

#include "oracles/frozen.hpp"
#include "rmt/mellin.hpp"
#include "rmt/specfun.hpp"

using namespace rmt;
using namespace rmt::mellin;

namespace {
const quad::ContourSpec kSpec{};
const Registry kReg;
}  // namespace

TEST_CASE("eval on the named pairs") {
    CHECK(std::abs(eval(kReg.get("exp"), 2.0, kSpec).value.real() - std::exp(-2.0)) < 1e-10);
    CHECK(std::abs(eval(kReg.get("xexp"), 1.0, kSpec).value.real() - std::exp(-1.0)) < 1e-10);
    for (const auto& name : {"exp", "xexp", "gauss2", "klt_ref"})
        for (double x : {0.4, 1.0, 2.5})
            CHECK(std::abs(eval(kReg.get(name), x, kSpec).value.real() - builtin_physical(name, x)) < 1e-9);
    CHECK(eval(kReg.get("zero"), 1.0, kSpec).value == cplx(0.0, 0.0));
    CHECK_THROWS_AS(eval(kReg.get("exp"), 0.0, kSpec), DomainError);
    CHECK_THROWS_AS(kReg.get("nope"), UsageError);
}

TEST_CASE("x^c0 f(x) decays at both ends and is bounded by the norm") {
    const auto fp = kReg.get("exp");
    const PhysicalFunction f(fp, kSpec);
    const double norm = m_norm(fp, kSpec).value;
    for (double x = 1e-3; x <= 1e3; x *= 1.5) CHECK(std::pow(x, fp.c0()) * std::abs(f(x).value) <= norm + 1e-10);
    CHECK(std::pow(1e-3, fp.c0()) * std::abs(f(1e-3).value) < 1e-5);
    CHECK(std::pow(1e3, 2.0) * std::abs(f(1e3).value) < 1e-9);
}

TEST_CASE("norm: frozen values, zero, homogeneity, triangle inequality") {
    CHECK(std::abs(m_norm(kReg.get("exp"), kSpec).value - frozen::mnorm_gamma_c2) < 1e-9);
    CHECK(std::abs(m_norm(kReg.get("exp").with_c0(3.0), kSpec).value - frozen::mnorm_gamma_c3) < 1e-9);
    CHECK(m_norm(MellinPair::zero(), kSpec).value == 0.0);
    const auto fp = kReg.get("exp");
    CHECK(std::abs(m_norm(fp.scaled(2.5), kSpec).value - 2.5 * m_norm(fp, kSpec).value) < 1e-12);
    const auto g = kReg.get("xexp");
    CHECK(m_norm(fp + g, kSpec).value <= m_norm(fp, kSpec).value + m_norm(g, kSpec).value + 1e-8);
    const MellinPair flat([](cplx) { return cplx(1.0, 0.0); }, 2.0, "one", Strip{});
    CHECK_THROWS_AS(m_norm(flat, kSpec), ConvergenceError);
}

TEST_CASE("linearity of eval") {
    const auto f = kReg.get("exp"), g = kReg.get("xexp");
    const cplx al(1.5, 0.0), be(-0.25, 0.0);
    const auto lhs = eval(f.scaled(al) + g.scaled(be), 0.8, kSpec).value;
    const auto rhs = al * eval(f, 0.8, kSpec).value + be * eval(g, 0.8, kSpec).value;
    CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("convolution with Mellin multipliers") {
    const auto fp = kReg.get("exp");
    CHECK(std::abs(eval(mellin_convolution(fp, [](cplx) { return cplx(1.0, 0.0); }), 1.3, kSpec).value -
                   eval(fp, 1.3, kSpec).value) < 1e-14);
    const auto gz = mellin_convolution(fp, [](cplx s) { return specfun::zeta(s); });
    CHECK(std::abs(eval(gz, 1.0, kSpec).value.real() - 1.0 / (std::exp(1.0) - 1.0)) < 1e-10);
    // Γ(s)·ζ(s)Γ(s) has physical side 2 Σ K0(2√(nx)).
    const auto gzg = mellin_convolution(fp, [](cplx s) { return specfun::zeta(s) * specfun::gamma(s); });
    CHECK(std::abs(eval(gzg, 1.0, kSpec).value.real() - frozen::bose_x1) < 1e-10);
}

TEST_CASE("strip and abscissa checks") {
    CHECK_THROWS_AS(kReg.get("exp").with_c0(-0.5), DomainError);
    CHECK(kReg.get("klt_ref").c0() == -1.0);
    CHECK(kReg.get("klt_ref").strip().lo == -3.0);
}

TEST_CASE("weighted membership") {
    const auto g2 = kReg.get("gauss2");
    CHECK(weighted_membership(g2, SpaceSpec{0.5, -1.0, 2.0}, kSpec).verdict == Verdict::member);
    const MellinPair flat([](cplx) { return cplx(1.0, 0.0); }, 2.0, "one", Strip{});
    CHECK(weighted_membership(flat, SpaceSpec{0.5, 0.0, 2.0}, kSpec).verdict == Verdict::diverges);
    // Boundary case: the verdict must not change when the height doubles.
    const auto fp = kReg.get("exp");
    const SpaceSpec edge{0.5, 0.5 - fp.c0(), fp.c0()};
    quad::ContourSpec tall = kSpec;
    tall.height *= 2.0;
    tall.nodes *= 2;
    CHECK(weighted_membership(fp, edge, kSpec).verdict == weighted_membership(fp, edge, tall).verdict);
    CHECK_THROWS_AS(SpaceSpec({-1.0, 0.5, 2.0}).validate(), DomainError);
}

TEST_CASE("user pair from key=value entries") {
    Registry reg;
    reg.load({{"pair.shifted.gamma", "1"}, {"pair.shifted.scale", "2"}});
    // 2 Γ(s+1) is the Mellin side of 2 x e^{-x}.
    CHECK(std::abs(eval(reg.get("shifted"), 1.5, kSpec).value.real() - 3.0 * std::exp(-1.5)) < 1e-10);
    CHECK_THROWS_AS(reg.load({{"pair.bad.colour", "1"}}), UsageError);
    CHECK_THROWS_AS(reg.load({{"pair.bad.scale", "x"}}), UsageError);
}
