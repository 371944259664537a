#include <iostream>
#include <string>
#include <vector>

#include "postpcp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return postpcp::cli::run(args, std::cout, std::cerr);
}
