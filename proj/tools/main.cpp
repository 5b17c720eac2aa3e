#include <iostream>

#include "confspace/cli.hpp"

int main(int argc, char** argv) { return confspace::run_cli(argc, argv, std::cout, std::cerr); }
