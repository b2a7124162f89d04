#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rmt/core.hpp"
#include "rmt/mellin.hpp"
#include "rmt/quad.hpp"

namespace rmt::cli {

using json = nlohmann::ordered_json;

// 17 significant digits, round-trip safe.
std::string fmt(double v);
std::string fmt_int(long long v);

json num(double v);
json exact(long long v);
json est(const Estimate& e);
json est(double value, double err);
json cest(const CEstimate& e);
json cest(cplx value, double err);
json cnum(cplx v);

double parse_double(const std::string& text, const char* what);
long long parse_int(const std::string& text, const char* what);
// "RE" or "RE,IM".
cplx parse_complex(const std::string& text, const char* what);
std::vector<double> parse_list(const std::string& text, const char* what);

// Plain key=value lines; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path);

struct Settings {
    double quad_tol = 1e-10;
    std::optional<double> c0;
    double height = 60.0;
    int nodes = 1920;
    std::optional<long long> N;
    double agree_tol = 1e-6;
    std::string config_path;
    std::map<std::string, std::string> kv;

    quad::ContourSpec contour() const;
    std::size_t count_or(std::size_t fallback) const;
    json snapshot() const;
};

struct Context {
    Settings settings;
    mellin::Registry registry;

    mellin::MellinPair pair(const std::string& name) const;
};

enum class Status { ok, inconclusive };

struct Outcome {
    json result;
    Status status = Status::ok;
    // Tabular payload for --csv and grid output; header first.
    std::vector<std::vector<std::string>> table;
};

enum class Format { text, json, csv };

std::string render(const std::string& command, const std::vector<std::string>& argv, const Settings& s,
                   const Outcome& out, Format format, std::optional<double> wall_seconds);

std::string render_error(const std::string& command, const std::string& kind, const std::string& message,
                         int exit_code, Format format);

}  // namespace rmt::cli
