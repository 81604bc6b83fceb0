#include "darcais/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return darcais::cli::run(argc, argv, std::cout, std::cerr);
}
