#include <iostream>

#include "ct/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ct::run(args, std::cout, std::cerr);
}
