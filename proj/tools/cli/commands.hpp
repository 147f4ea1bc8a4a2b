#pragma once

#include "semilinear/construct.hpp"
#include "semilinear/json_io.hpp"
#include "semilinear/oracle.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace cli {

/// Exit codes.
enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

struct Context {
    std::filesystem::path out = ".";
    std::uint64_t seed = 0;
    std::string sched_name = "standard";
    semilinear::ConstantSchedule sched;
    semilinear::OracleBudget budget = semilinear::OracleBudget::clique();
    std::vector<std::string> args;  // command line without --out, for the manifest
};

struct GenOptions {
    std::string family;
    std::size_t m = 8;
    std::size_t k = 2;
    std::size_t p = 2;
    std::size_t g = 2;
    std::string in;
};

struct ColorOptions {
    std::string graph;
    std::size_t s = 3;
    std::string family;
    std::string m_range;
    std::size_t k = 2;
};

struct VerifyOptions {
    std::string graph;
    std::string coloring;
    std::string witness;
    std::string cotree;
    bool chromatic = false;
    bool k22_free = false;
    std::size_t girth_at_least = 0;
};

int cmd_gen(const GenOptions& opt, const Context& ctx);
int cmd_color(const ColorOptions& opt, const Context& ctx);
int cmd_ramsey(const std::string& graph, const Context& ctx);
int cmd_verify(const VerifyOptions& opt, const Context& ctx);
int cmd_replay(const std::string& manifest, const Context& ctx);

/// Parses and runs one command line (without the program name).
int run(const std::vector<std::string>& args);

}  // namespace cli
