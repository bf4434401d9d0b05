#include <iostream>
#include <vector>

#include "stackcoh/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    cli::RunResult r = cli::run(args);
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
