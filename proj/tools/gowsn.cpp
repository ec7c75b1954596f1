#include <iostream>
#include <string>
#include <vector>

#include "gowsn/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return gowsn::run_cli(args, std::cout, std::cerr);
}
