// Helpers for driving the installed CLI binary in tests.
#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace cli {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

#ifndef COVDEPTH_CLI_PATH
#error "COVDEPTH_CLI_PATH must be defined by the build"
#endif

inline std::string binary_path() { return COVDEPTH_CLI_PATH; }

// Runs the CLI with stderr dropped; stdout captured. `env_prefix` is placed
// before the binary (e.g. "COVDEPTH_SEED=7").
inline RunResult run(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd =
        (env_prefix.empty() ? "" : "env " + env_prefix + " ") + binary_path() + " " + args +
        " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    RunResult r;
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

inline std::filesystem::path temp_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "covdepth-tests";
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::string write_file(const std::string& name, const std::string& content) {
    const auto path = temp_dir() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path.string();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline const char* cyclic_code_json() {
    return R"({
  "n": 8, "k": 4, "kind": "xor",
  "generator": [
    [1,0,0,0,1,0,0,1],
    [0,1,0,0,1,1,0,0],
    [0,0,1,0,0,1,1,0],
    [0,0,0,1,0,0,1,1]
  ]
})";
}

}  // namespace cli
