#include <iostream>

#include "levibranch/cli.hpp"

int main(int argc, char** argv) { return lvb::run_cli(argc, argv, std::cout, std::cerr); }
