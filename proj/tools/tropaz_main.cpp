#include <iostream>
#include <string>
#include <vector>

#include "tropaz/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tropaz::run(args, std::cout, std::cerr);
}
