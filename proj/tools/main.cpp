#include <iostream>
#include <string>
#include <vector>

#include "tracecodes/report.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tracecodes::run_cli(args, std::cout, std::cerr);
}
