#include <gencx/cli/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return gencx::cli::main(argc, argv, std::cout, std::cerr); }
