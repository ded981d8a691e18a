#include <iostream>

#include "cleanmat/cli.hpp"

int main(int argc, char **argv) { return cleanmat::cli::run(argc, argv, std::cout, std::cerr); }
