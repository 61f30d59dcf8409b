#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "gtm/cli/app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return gtm::cli::run(args, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "gtm: " << e.what() << '\n';
        return 1;
    }
}
