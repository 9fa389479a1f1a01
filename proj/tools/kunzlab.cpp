#include <iostream>

#include "kunzlab/cli.hpp"

int main(int argc, char** argv) { return kunzlab::cli::run(argc, argv, std::cout, std::cerr); }
