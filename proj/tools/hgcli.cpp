#include <iostream>

#include "hg/cli/commands.hpp"

int main(int argc, char** argv) { return hg::cli::run_cli(argc, argv, std::cout, std::cerr); }
