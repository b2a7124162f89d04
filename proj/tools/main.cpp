#include <chrono>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using namespace rmt::cli;

const char* kTraceability = R"(
Traceability (subcommand -> mathematical object):
  arith      Dirichlet coefficients mu, |mu|, lambda, phi, d, d(n^2), d^2, omega, 2^omega, sigma_a
  specfun    Gamma, zeta, eta = (1-2^{1-s}) zeta, K_nu and K_{i tau}, J_1, P^{1/2}_{(i tau-1)/2}
  verify     Ramanujan-type identities sum c(n) n^{-s} = zeta-product, ids R1..R11
  transform  series:<w>      g(x) = sum c(n) f(nx), multiplier sum c(n) n^{-s}
             expansion:<id>  Moebius round trips E2_1..E2_5 and arithmetic expansions T2_1..T2_14
             lambert         int f(t) dt / (t (e^{x/t} - 1)), Mellin side zeta(s) Gamma(s) f*(s)
             widder-lambert  int f(t) dt / (t (e^{x/t} + 1)), Mellin side eta(s) Gamma(s) f*(s)
  invert     moebius         f(x) = sum mu(n) g(nx) and the other reciprocal series
             widder          F_k(x) = (1/2 pi i) int s k^{-s} prod_{j<=k}(1+s/j) g*(s)/D(s) x^{-s} ds
  klt        kernel          M_{i tau}(x) = sum K_{i tau}(nx), series / contour / cosh integral
             moment          int M_{i tau}(x) x^{s-1} dx = 2^{s-2} Gamma((s+i tau)/2) Gamma((s-i tau)/2) zeta(s)
             forward         int M_{i tau}(x) f(x) dx against its Mellin-Parseval contour
             composition     M_{i tau}[f] against K_{i tau}[sum f(x/n)/n]
             cosine          cosine inversion of the index transform
             invert          Moebius-Legendre inversion kernel, reconstruction of x f(x)
  kernel     U_{k,m}(x), Mellin side eta^{k+1}(s) Gamma^{m+1}(s), contour or iterated convolution
  salem      --check factorization   double integral = eta^2(s) Gamma^2(s)  (alias 4.3)
             --check bessel-series   Fermi double integral = sum d(n)[K0 - 4K0 + 4K0]  (alias 4.5)
             --check moment          int U_{k,m}(t) t^{s-1} dt
             --check translation     int e^{delta y} U_{k,m}(e^y) dy
             --residual --mode double      int int e^{-delta u} f(u) Fermi-Fermi kernel  (alias 4.2)
             --residual --mode single:K,M  int e^{-delta u} U_{K,M}(e^{x-u}) f(u) du  (alias 4.6:K,M)
             --residual --mode meijer      d(n)-weighted K0 combination against half the double residual
  grid       CSV plot data (x, value, err_estimate) for ml_kernel, u_kernel, inversion_kernel, physical, lambert

Exit codes: 0 ok, 1 usage, 2 domain, 3 non-convergence, 4 inconclusive verification.
)";

void apply_config(Settings& s, const std::map<std::string, std::string>& kv) {
    for (const auto& [k, v] : kv) {
        if (k == "quad_tol") s.quad_tol = parse_double(v, "quad_tol");
        else if (k == "c0") s.c0 = parse_double(v, "c0");
        else if (k == "height") s.height = parse_double(v, "height");
        else if (k == "nodes") s.nodes = static_cast<int>(parse_int(v, "nodes"));
        else if (k == "N") s.N = parse_int(v, "N");
        else if (k == "agree_tol") s.agree_tol = parse_double(v, "agree_tol");
        else if (k.rfind("pair.", 0) != 0) throw rmt::UsageError("unknown config key '" + k + "'");
    }
}

int exit_for(const std::string& command, const std::string& kind, const std::string& msg, int code, Format f) {
    std::cerr << "error: " << msg << "\n";
    std::cout << render_error(command, kind, msg, code, f);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirichlet-series identities, Moebius-type transforms, index transforms and Fermi kernels", "rmt"};
    app.footer(kTraceability);
    app.require_subcommand(1);

    std::optional<double> quad_tol, c0, height, agree_tol;
    std::optional<int> nodes;
    std::optional<long long> N;
    std::optional<std::string> config;
    bool as_json = false, as_csv = false, timing = false;
    app.add_option("--quad-tol", quad_tol, "quadrature tolerance (default 1e-10)");
    app.add_option("--c0", c0, "contour abscissa; overrides the pair's default line");
    app.add_option("--height", height, "contour truncation height (default 60)");
    app.add_option("--nodes", nodes, "contour nodes (default 1920)");
    app.add_option("--N", N, "series truncation");
    app.add_option("--agree-tol", agree_tol, "floor for dual-path agreement (default 1e-6)");
    app.add_option("--config", config, "key=value config file; RM_CONFIG is the fallback");
    auto* jflag = app.add_flag("--json", as_json, "JSON envelope on stdout");
    app.add_flag("--csv", as_csv, "CSV on stdout")->excludes(jflag);
    app.add_flag("--timing", timing, "append wall time (breaks byte reproducibility)");

    ArithArgs arith;
    std::optional<std::string> arith_out;
    auto* c_arith = app.add_subcommand("arith", "arithmetic function tables");
    c_arith->add_option("--fn", arith.fn, "function id")->required();
    c_arith->add_option("--max", arith.max, "last index")->required();
    c_arith->add_option("--a", arith.a, "sigma parameter RE[,IM]");
    c_arith->add_option("--out", arith_out, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    SpecfunArgs spf;
    auto* c_spec = app.add_subcommand("specfun", "special functions");
    c_spec->add_option("--fn", spf.fn, "gamma|zeta|eta|besselk|besselj1|legendre")->required();
    c_spec->add_option("--args", spf.args, "RE[,IM] | ORDER,X (ORDER may be iT) | X | TAU,Z")->required();

    VerifyArgs ver;
    auto* c_ver = app.add_subcommand("verify", "Dirichlet-series identity check");
    c_ver->add_option("--identity", ver.identity, "R1..R11")->required();
    c_ver->add_option("--s", ver.s, "RE[,IM]")->required();
    c_ver->add_option("--a", ver.a, "RE[,IM]");
    c_ver->add_option("--b", ver.b, "RE[,IM]");

    TransformArgs tr;
    auto* c_tr = app.add_subcommand("transform", "series and Lambert-type transforms");
    c_tr->add_option("--kind", tr.kind, "series:<weight>|expansion:<id>|lambert|widder-lambert")->required();
    c_tr->add_option("--f", tr.f, "Mellin pair name (default exp)");
    c_tr->add_option("--x", tr.x, "evaluation point");

    InvertArgs inv;
    auto* c_inv = app.add_subcommand("invert", "reciprocal series and the finite-k Widder approximant");
    c_inv->add_option("--kind", inv.kind, "moebius|widder")->required();
    c_inv->add_option("--k", inv.k, "approximant order");
    c_inv->add_option("--x", inv.x, "evaluation point");
    c_inv->add_option("--f", inv.f, "Mellin pair name (default exp)");
    c_inv->add_option("--series", inv.series, "weight whose series is inverted (default unit)");
    c_inv->add_option("--lambert", inv.lambert, "bose|fermi (default bose)");

    KltArgs kl;
    auto* c_klt = app.add_subcommand("klt", "index transform with the Bessel-Lambert kernel");
    c_klt->add_option("--op", kl.op, "kernel|moment|forward|invert|composition|cosine")->required();
    c_klt->add_option("--tau", kl.tau, "index");
    c_klt->add_option("--x", kl.x, "argument");
    c_klt->add_option("--method", kl.method, "series|contour|integral|all");
    c_klt->add_option("--s", kl.s, "moment exponent RE[,IM]");
    c_klt->add_option("--u", kl.u, "cosine variable");
    c_klt->add_option("--tau-max", kl.tau_max, "index cutoff");
    c_klt->add_option("--kernel-N", kl.kernel_n, "Moebius terms in the inversion kernel");

    KernelArgs ker;
    auto* c_ker = app.add_subcommand("kernel", "Fermi-Gamma kernels U_{k,m}");
    c_ker->add_option("--k", ker.k, "eta power minus one");
    c_ker->add_option("--m", ker.m, "Gamma power minus one");
    c_ker->add_option("--x", ker.x, "argument");
    c_ker->add_option("--method", ker.method, "contour|convolution|both");

    SalemArgs sal;
    auto* c_sal = app.add_subcommand("salem", "Fermi kernel identities and residuals");
    c_sal->add_option("--check", sal.check, "factorization|bessel-series|moment|translation");
    c_sal->add_flag("--residual", sal.residual, "evaluate a residual instead of a check");
    c_sal->add_option("--f", sal.f, "zero|one|indicator:a,b|bump:a,b");
    c_sal->add_option("--delta", sal.delta, "weight exponent in (1/2, 1)");
    c_sal->add_option("--x", sal.x, "shift");
    c_sal->add_option("--mode", sal.mode, "double|single:K,M|meijer");
    c_sal->add_option("--s", sal.s, "moment exponent");
    c_sal->add_option("--k", sal.k, "kernel k");
    c_sal->add_option("--m", sal.m, "kernel m");

    GridArgs grid;
    auto* c_grid = app.add_subcommand("grid", "plot data on a grid");
    c_grid->add_option("--of", grid.of, "ml_kernel|u_kernel|inversion_kernel|physical|lambert");
    c_grid->add_option("--logspace", grid.logspace, "LO,HI,COUNT");
    c_grid->add_option("--linspace", grid.linspace, "LO,HI,COUNT");
    c_grid->add_option("--points", grid.points, "x1,x2,...");
    c_grid->add_option("--tau", grid.tau, "index for kernels");
    c_grid->add_option("--k", grid.k, "kernel k");
    c_grid->add_option("--m", grid.m, "kernel m");
    c_grid->add_option("--f", grid.f, "Mellin pair name");
    c_grid->add_option("--lambert", grid.lambert, "bose|fermi");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::string command = "none";
    Format format = Format::text;
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return 1;
    }
    format = as_json ? Format::json : as_csv ? Format::csv : Format::text;
    for (auto* sub : app.get_subcommands()) command = sub->get_name();
    if (command == "arith" && arith_out) format = *arith_out == "json" ? Format::json : Format::csv;
    if (command == "arith" && !arith_out && !as_json) format = Format::csv;
    if (command == "grid" && !as_json) format = Format::csv;

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        Context ctx;
        Settings& s = ctx.settings;
        if (config) s.config_path = *config;
        else if (const char* env = std::getenv("RM_CONFIG"); env && *env) s.config_path = env;
        if (!s.config_path.empty()) {
            s.kv = read_config(s.config_path);
            apply_config(s, s.kv);
        }
        if (quad_tol) s.quad_tol = *quad_tol;
        if (c0) s.c0 = *c0;
        if (height) s.height = *height;
        if (nodes) s.nodes = *nodes;
        if (N) s.N = *N;
        if (agree_tol) s.agree_tol = *agree_tol;
        if (!(s.quad_tol > 0.0) || !(s.agree_tol > 0.0)) throw rmt::UsageError("tolerances must be positive");
        s.contour();
        ctx.registry.load(s.kv);

        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        if (command == "arith") out = run_arith(ctx, arith);
        else if (command == "specfun") out = run_specfun(ctx, spf);
        else if (command == "verify") out = run_verify(ctx, ver);
        else if (command == "transform") out = run_transform(ctx, tr);
        else if (command == "invert") out = run_invert(ctx, inv);
        else if (command == "klt") out = run_klt(ctx, kl);
        else if (command == "kernel") out = run_kernel(ctx, ker);
        else if (command == "salem") out = run_salem(ctx, sal);
        else if (command == "grid") out = run_grid(ctx, grid);
        else throw rmt::UsageError("no subcommand");
        std::optional<double> wall;
        if (timing) wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << render(command, args, s, out, format, wall);
        return out.status == Status::ok ? 0 : 4;
    } catch (const rmt::UsageError& e) {
        return exit_for(command, "usage", e.what(), 1, format);
    } catch (const rmt::DomainError& e) {
        return exit_for(command, "domain", e.what(), 2, format);
    } catch (const rmt::ConvergenceError& e) {
        return exit_for(command, "convergence", e.what(), 3, format);
    } catch (const std::invalid_argument& e) {
        return exit_for(command, "usage", e.what(), 1, format);
    } catch (const std::exception& e) {
        return exit_for(command, "internal", e.what(), 3, format);
    }
}
