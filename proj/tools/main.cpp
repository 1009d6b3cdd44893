#include "potframe/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    const potframe::CliResult r = potframe::run_cli(std::vector<std::string>(argv + 1, argv + argc));
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit;
}
