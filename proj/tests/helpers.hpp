#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace testutil {

namespace fs = std::filesystem;

// Self-deleting unique directory under the system temp root.
struct TempDir {
    fs::path path;

    TempDir() {
        auto base = fs::temp_directory_path() / "pakforge-test-XXXXXX";
        std::string buf = base.string();
        if (!mkdtemp(buf.data()))
            throw std::runtime_error("mkdtemp failed");
        path = buf;
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    fs::path operator/(const std::string& rel) const { return path / rel; }
};

inline void write_file(const fs::path& file, const std::string& content) {
    fs::create_directories(file.parent_path());
    std::ofstream out(file, std::ios::binary);
    out << content;
    if (!out)
        throw std::runtime_error("write failed: " + file.string());
}

inline std::string read_file(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw std::runtime_error("read failed: " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::vector<std::string> list_files(const fs::path& root) {
    std::vector<std::string> out;
    for (const auto& entry : fs::recursive_directory_iterator(root))
        if (entry.is_regular_file())
            out.push_back(entry.path().lexically_relative(root).generic_string());
    std::sort(out.begin(), out.end());
    return out;
}

// Deterministic xorshift generator so property tests replay identically.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

// Runs the built binary through /bin/sh with stdin supplied and both output
// streams captured. `env` entries are KEY=VALUE prefixes.
inline RunResult run_cli(const std::string& binary, const std::string& args,
                         const std::string& stdin_text = "",
                         const std::vector<std::string>& env = {}) {
    TempDir io;
    write_file(io / "in", stdin_text);
    std::string cmd;
    for (const auto& pair : env)
        cmd += pair + " ";
    cmd += "\"" + binary + "\" " + args;
    cmd += " < \"" + (io / "in").string() + "\"";
    cmd += " > \"" + (io / "out").string() + "\"";
    cmd += " 2> \"" + (io / "err").string() + "\"";

    int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    result.out = read_file(io / "out");
    result.err = read_file(io / "err");
    return result;
}

} // namespace testutil
