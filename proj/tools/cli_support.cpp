#include "cli_support.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace rmt::cli {

std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v == 0.0 ? 0.0 : v);  // folds -0 into 0
    return buf;
}

std::string fmt_int(long long v) { return std::to_string(v); }

json num(double v) { return fmt(v); }
json exact(long long v) { return json{{"value", fmt_int(v)}, {"error", "exact"}}; }
json est(double value, double err) { return json{{"value", fmt(value)}, {"error", fmt(err)}}; }
json est(const Estimate& e) { return est(e.value, e.abs_error); }
json cnum(cplx v) { return json{{"re", fmt(v.real())}, {"im", fmt(v.imag())}}; }
json cest(cplx value, double err) {
    return json{{"re", fmt(value.real())}, {"im", fmt(value.imag())}, {"error", fmt(err)}};
}
json cest(const CEstimate& e) { return cest(e.value, e.abs_error); }

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(trim(item));
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

}  // namespace

double parse_double(const std::string& text, const char* what) {
    const std::string t = trim(text);
    if (t.empty()) throw UsageError(std::string(what) + ": empty number");
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v))
        throw UsageError(std::string(what) + ": cannot parse number '" + text + "'");
    return v;
}

long long parse_int(const std::string& text, const char* what) {
    const std::string t = trim(text);
    char* end = nullptr;
    errno = 0;
    const long long v = std::strtoll(t.c_str(), &end, 10);
    if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE)
        throw UsageError(std::string(what) + ": cannot parse integer '" + text + "'");
    return v;
}

cplx parse_complex(const std::string& text, const char* what) {
    const auto parts = split(text, ',');
    if (parts.size() == 1) return {parse_double(parts[0], what), 0.0};
    if (parts.size() == 2) return {parse_double(parts[0], what), parse_double(parts[1], what)};
    throw UsageError(std::string(what) + ": expected RE or RE,IM, got '" + text + "'");
}

std::vector<double> parse_list(const std::string& text, const char* what) {
    std::vector<double> out;
    for (const auto& p : split(text, ',')) out.push_back(parse_double(p, what));
    return out;
}

std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        if (key.empty()) throw UsageError(path + ":" + std::to_string(lineno) + ": empty key");
        kv[key] = trim(line.substr(eq + 1));
    }
    return kv;
}

quad::ContourSpec Settings::contour() const {
    quad::ContourSpec spec;
    if (c0) spec.c0 = *c0;
    spec.height = height;
    spec.nodes = nodes;
    spec.validate();
    return spec;
}

std::size_t Settings::count_or(std::size_t fallback) const {
    if (!N) return fallback;
    if (*N < 1) throw DomainError("--N must be at least 1");
    return static_cast<std::size_t>(*N);
}

json Settings::snapshot() const {
    json j;
    j["quad_tol"] = fmt(quad_tol);
    j["c0"] = c0 ? json(fmt(*c0)) : json("default");
    j["height"] = fmt(height);
    j["nodes"] = fmt_int(nodes);
    j["N"] = N ? json(fmt_int(*N)) : json("default");
    j["agree_tol"] = fmt(agree_tol);
    j["config"] = config_path.empty() ? json("none") : json(config_path);
    return j;
}

mellin::MellinPair Context::pair(const std::string& name) const {
    const mellin::MellinPair fp = registry.get(name);
    return settings.c0 ? fp.with_c0(*settings.c0) : fp;
}

namespace {

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else if (j.is_string()) {
        out.emplace_back(prefix, j.get<std::string>());
    } else {
        out.emplace_back(prefix, j.dump());
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string status_name(Status s) { return s == Status::ok ? "ok" : "inconclusive"; }

}  // namespace

std::string render(const std::string& command, const std::vector<std::string>& argv, const Settings& s,
                   const Outcome& out, Format format, std::optional<double> wall_seconds) {
    std::ostringstream os;
    if (format == Format::json) {
        json env;
        env["command"] = command;
        env["argv"] = argv;
        env["config"] = s.snapshot();
        json result = out.result;
        if (!out.table.empty()) {
            json rows = json::array();
            for (std::size_t i = 1; i < out.table.size(); ++i) {
                json row;
                for (std::size_t c = 0; c < out.table[0].size(); ++c) row[out.table[0][c]] = out.table[i][c];
                rows.push_back(row);
            }
            result["rows"] = rows;
        }
        env["result"] = result;
        env["status"] = status_name(out.status);
        if (wall_seconds) env["wall_time_s"] = fmt(*wall_seconds);
        os << env.dump(2) << "\n";
        return os.str();
    }
    if (format == Format::csv) {
        if (!out.table.empty()) {
            for (const auto& row : out.table) {
                for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(row[c]);
                os << "\n";
            }
        } else {
            std::vector<std::pair<std::string, std::string>> flat;
            flatten(out.result, "", flat);
            os << "key,value\n";
            for (const auto& [k, v] : flat) os << csv_field(k) << "," << csv_field(v) << "\n";
            os << "status," << status_name(out.status) << "\n";
        }
        return os.str();
    }
    std::vector<std::pair<std::string, std::string>> flat;
    flatten(out.result, "", flat);
    os << "command = " << command << "\n";
    for (const auto& [k, v] : flat) os << k << " = " << v << "\n";
    for (std::size_t i = 0; i < out.table.size(); ++i) {
        for (std::size_t c = 0; c < out.table[i].size(); ++c) os << (c ? "  " : "") << out.table[i][c];
        os << "\n";
    }
    os << "status = " << status_name(out.status) << "\n";
    if (wall_seconds) os << "wall_time_s = " << fmt(*wall_seconds) << "\n";
    return os.str();
}

std::string render_error(const std::string& command, const std::string& kind, const std::string& message,
                         int exit_code, Format format) {
    if (format != Format::json) return "";
    json env;
    env["command"] = command;
    env["status"] = "error";
    env["error"] = json{{"kind", kind}, {"message", message}, {"exit_code", exit_code}};
    return env.dump(2) + "\n";
}

}  // namespace rmt::cli
