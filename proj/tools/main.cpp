#include <iostream>

#include "orthobound/cli.hpp"

int main(int argc, char** argv) { return orthobound::run_cli(argc, argv, std::cout, std::cerr); }
