#include <iostream>

#include "bicext/cli.hpp"

int main(int argc, char** argv) { return bicext::cli::main(argc, argv, std::cout, std::cerr); }
