#include <iostream>

#include "quatsolve/cli.hpp"

int main(int argc, char** argv) { return quatsolve::cli::run(argc, argv, std::cout, std::cerr); }
