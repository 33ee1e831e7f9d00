#include <iostream>

#include "dyckwalk/cli.hpp"

int main(int argc, char** argv) { return dyckwalk::cli::run_cli(argc, argv, std::cout, std::cerr); }
