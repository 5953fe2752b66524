#include <iostream>

#include "nonloose/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nonloose::run_cli(args, std::cout, std::cerr);
}
