#include "qqwalk/cli.hpp"

#include <cstdio>

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = qqwalk::cli::run(args);
    // one write per stream so a reader never sees a partial report
    if (!result.out.empty())
        std::fwrite(result.out.data(), 1, result.out.size(), stdout);
    if (!result.err.empty())
        std::fwrite(result.err.data(), 1, result.err.size(), stderr);
    return result.exit_code;
}
