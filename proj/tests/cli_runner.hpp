#pragma once

// Runs the command-line tool and captures stdout and the exit code.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#ifndef RMT_CLI_PATH
#error "RMT_CLI_PATH must name the rmt-cli executable"
#endif

struct CliRun {
    std::string out;
    int code = -1;
};

// With merge_stderr the diagnostics are captured too, interleaved with stdout.
inline CliRun run_cli(const std::string& args, const std::string& env = "", bool merge_stderr = false) {
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" RMT_CLI_PATH "' " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    CliRun r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}
