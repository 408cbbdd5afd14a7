#include "gammalab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return gammalab::run_cli(argc, argv, std::cout, std::cerr); }
