#include <iostream>
#include <string>
#include <vector>

#include "qens_cli/app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qens::cli::main_entry(std::move(args), std::cout, std::cerr);
}
