#include <iostream>
#include <string>
#include <vector>

#include "mmagg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mmagg::run_cli(args, std::cout, std::cerr);
}
