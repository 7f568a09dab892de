#include <iostream>

#include "bicat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bicat::run_command(args, std::cout, std::cerr);
}
