#include <iostream>

#include "gasket/cli.hpp"

int main(int argc, char** argv) { return gasket::run_cli(argc, argv, std::cout, std::cerr); }
