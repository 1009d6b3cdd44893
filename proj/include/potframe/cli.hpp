#ifndef POTFRAME_CLI_HPP
#define POTFRAME_CLI_HPP

#include <string>
#include <vector>

namespace potframe {

struct CliResult
{
    int exit = 0; // 0 verdicts true, 1 some verdict false, 2 parse or domain error
    std::string out;
    std::string err;
};

// args excludes the program name. Reads POTFRAME_MAX_ORDER (default 12).
CliResult run_cli(const std::vector<std::string>& args);

} // namespace potframe

#endif // POTFRAME_CLI_HPP
