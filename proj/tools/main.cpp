#include <cstdlib>
#include <iostream>

#include "check.hpp"
#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return preimage::cli::run(args, std::cout, std::cerr);
    } catch (const preimage::cli::InternalError& e) {
        std::cerr << "internal error: " << e.what() << std::endl;
        std::abort();
    }
}
