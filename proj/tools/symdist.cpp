#include <iostream>

#include "symdist/cli.hpp"

int main(int argc, char** argv) { return symdist::run_cli(argc, argv, std::cout, std::cerr); }
