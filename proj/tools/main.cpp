#include <iostream>
#include <string>
#include <vector>

#include "gridresolve/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gridresolve::cli::run(args, std::cout, std::cerr);
}
