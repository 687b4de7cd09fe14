#include "ratroot/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return ratroot::run_cli(argc, argv, std::cout, std::cerr);
}
