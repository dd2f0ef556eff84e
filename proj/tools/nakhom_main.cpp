#include <iostream>
#include <string>
#include <vector>

#include "nakhom/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nakhom::run_cli(args, std::cout, std::cerr);
}
