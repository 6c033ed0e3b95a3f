#include <iostream>

#include "schroeter/cli.hpp"

int main(int argc, char** argv) { return schroeter::run_cli(argc, argv, std::cout, std::cerr); }
