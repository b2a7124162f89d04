#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "cli_runner.hpp"
#include "cli_support.hpp"

using namespace rmt;
using namespace rmt::cli;

TEST_CASE("number formatting") {
    CHECK(fmt(0.1) == "1.0000000000000001e-01");
    CHECK(fmt(-0.0) == "0.0000000000000000e+00");
    CHECK(fmt(1.0 / 0.0) == "inf");
    CHECK(fmt(std::nan("")) == "nan");
    CHECK(std::stod(fmt(1.0 / 3.0)) == 1.0 / 3.0);
    CHECK(exact(12)["error"] == "exact");
}

TEST_CASE("argument parsers") {
    CHECK(parse_double("2.5", "x") == 2.5);
    CHECK_THROWS_AS(parse_double("2.5q", "x"), UsageError);
    CHECK_THROWS_AS(parse_int("", "n"), UsageError);
    CHECK(parse_complex("1,-2", "s") == cplx(1.0, -2.0));
    CHECK(parse_complex("3", "s") == cplx(3.0, 0.0));
    CHECK(parse_list("1,2,4", "l") == std::vector<double>{1.0, 2.0, 4.0});
    CHECK_THROWS_AS(parse_list("1,,2", "l"), UsageError);
}

TEST_CASE("config file") {
    const std::string path = "test_cli_config.txt";
    {
        std::ofstream f(path);
        f << "# comment\nquad_tol = 1e-8\n\npair.p.gamma=1\n";
    }
    const auto kv = read_config(path);
    CHECK(kv.at("quad_tol") == "1e-8");
    CHECK(kv.at("pair.p.gamma") == "1");
    {
        std::ofstream f(path);
        f << "novalue\n";
    }
    CHECK_THROWS_AS(read_config(path), UsageError);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_config("does/not/exist"), UsageError);
}

TEST_CASE("settings validation") {
    Settings s;
    s.N = 0;
    CHECK_THROWS_AS(s.count_or(10), DomainError);
    s.N = std::nullopt;
    CHECK(s.count_or(10) == 10);
    s.nodes = 4;
    CHECK_THROWS(s.contour());
}

TEST_CASE("exit codes") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("").code == 1);
    CHECK(run_cli("frobnicate").code == 1);
    CHECK(run_cli("kernel --k 0 --m 0 --x 1 --json --csv").code == 1);
    CHECK(run_cli("verify --identity R5 --s 3 --N 10000").code == 0);
    CHECK(run_cli("verify --identity R10 --s 1.5 --N 1000").code == 2);
    CHECK(run_cli("kernel --k 0 --m 0 --x -1").code == 2);
    CHECK(run_cli("grid --of ml_kernel").code == 1);
    CHECK(run_cli("specfun --fn gamma --args 0").code == 2);
    // Height far too small for the Gamma line integral.
    CHECK(run_cli("kernel --k 0 --m 0 --x 1 --height 2 --method contour").code == 3);
    CHECK(run_cli("klt --op invert --x 1 --tau-max 6 --kernel-N 500").code == 4);
}

TEST_CASE("json envelope and printed precision") {
    const auto r = run_cli("kernel --k 0 --m 0 --x 1 --json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "kernel");
    CHECK(j["status"] == "ok");
    CHECK(j.contains("config"));
    CHECK(!j.contains("wall_time_s"));
    const std::string v = j["result"]["contour"]["value"];
    CHECK(v.size() == std::string("2.6894142136999521e-01").size());
    CHECK(std::abs(std::stod(v) - 1.0 / (std::exp(1.0) + 1.0)) < 1e-12);
    CHECK(nlohmann::json::parse(run_cli("kernel --k 0 --m 0 --x 1 --json --timing").out).contains("wall_time_s"));
}

TEST_CASE("config precedence: file under flags, RM_CONFIG as fallback") {
    const std::string path = "test_cli_prec.txt";
    {
        std::ofstream f(path);
        f << "N = 50\n";
    }
    auto getN = [](const CliRun& r) { return nlohmann::json::parse(r.out)["result"]["N"].get<std::string>(); };
    CHECK(getN(run_cli("verify --identity R5 --s 3 --json --config " + path)) == "50");
    CHECK(getN(run_cli("verify --identity R5 --s 3 --json", "RM_CONFIG=" + path)) == "50");
    CHECK(getN(run_cli("verify --identity R5 --s 3 --N 70 --json --config " + path)) == "70");
    {
        std::ofstream f(path);
        f << "colour = blue\n";
    }
    CHECK(run_cli("verify --identity R5 --s 3 --config " + path).code == 1);
    std::remove(path.c_str());
}

TEST_CASE("csv and grid output") {
    const auto g = run_cli("grid --of ml_kernel --tau 1 --logspace 0.1,10,5");
    REQUIRE(g.code == 0);
    CHECK(g.out.rfind("x,value,err_estimate\n", 0) == 0);
    CHECK(g.out.find("1.0000000000000001e-01,") != std::string::npos);
    CHECK(std::count(g.out.begin(), g.out.end(), '\n') == 6);
    const auto a = run_cli("arith --fn mu --max 10");
    REQUIRE(a.code == 0);
    CHECK(a.out.find("10,1") != std::string::npos);
}

TEST_CASE("byte-reproducible output") {
    for (const char* args : {"verify --identity R7 --s 2 --N 20000 --json", "salem --check factorization --json",
                             "grid --of u_kernel --k 1 --m 1 --linspace 0.5,2,7"}) {
        const auto a = run_cli(args), b = run_cli(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}
