#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return seq2adic::cli::run(argc, argv, std::cout, std::cerr);
}
