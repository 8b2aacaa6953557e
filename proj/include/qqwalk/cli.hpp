#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qqwalk::cli
{

enum class Output
{
    json,
    csv,
};

struct RunConfig
{
    std::string subcommand;
    std::filesystem::path graph_path;
    std::optional<std::filesystem::path> coin_path;
    std::optional<std::string> alpha_literal;
    bool grover = false;
    std::string method = "direct";
    double tol = 1e-9;
    int samples = 8;
    Output output = Output::json;
    std::uint64_t seed = 0;
    std::optional<std::filesystem::path> fixtures;   // selftest: read golden files from here
};

struct RunResult
{
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Parses `args` (program name excluded) and runs the subcommand. Exit codes:
/// 0 success, 1 failed verdict or numerical failure, 2 bad input.
RunResult run(const std::vector<std::string>& args);

/// Runs an already-parsed configuration.
RunResult execute(const RunConfig& config);

struct Check
{
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Golden checks on the bundled examples plus 20 seeded random route-agreement
/// instances. With `fixtures` set, the example files are read from disk.
std::vector<Check> selftest_checks(const std::optional<std::filesystem::path>& fixtures, std::uint64_t seed);

/// Contents of the files under fixtures/, compiled in.
namespace golden
{
inline constexpr std::string_view k3_g = "# complete graph K3\n3 3\n0 1\n1 2\n2 0\n";
inline constexpr std::string_view k13_g = "# star K1,3: leaves 0, 1, 2 joined to centre 3\n4 3\n0 3\n1 3\n2 3\n";
inline constexpr std::string_view ex5_w =
    "# per-arc weights on k13.g; every other arc weighs 0\na 0 1+i\na 2 1-j\na 4 2\n";
inline constexpr std::string_view k3_grover_w = "# Grover coin 2/deg on k3.g\nv 0 1\nv 1 1\nv 2 1\n";
inline constexpr std::string_view k13_grover_w =
    "# Grover coin 2/deg on k13.g\nv 0 2\nv 1 2\nv 2 2\nv 3 0.6666666666666666\n";
} // namespace golden

} // namespace qqwalk::cli
