#include <iostream>
#include <string>
#include <vector>

#include "mixedpde/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    std::vector<std::string> args(argv, argv + argc);
    return mixedpde::cli::run(args, std::cout, std::cerr);
}
