#include <iostream>
#include <string>
#include <vector>

#include "tifs/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tifs::dispatch(args, std::cout, std::cerr);
}
