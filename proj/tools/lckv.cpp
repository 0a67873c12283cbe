#include "lckv/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return lckv::run_cli(argc, argv, std::cout, std::cerr); }
