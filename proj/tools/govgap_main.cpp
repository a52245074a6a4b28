#include <iostream>
#include <string>
#include <vector>

#include "govgap/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return govgap::cli::run(args, std::cout, std::cerr);
}
