#include <iostream>

#include "lsqfit/cli.hpp"

int main(int argc, char** argv) {
    return lsqfit::cli_main(argc, argv, std::cin, std::cout, std::cerr);
}
