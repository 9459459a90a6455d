#include <iostream>

#include "pbt_cli/commands.hpp"

int main(int argc, char** argv) { return pbt::cli::run(argc, argv, std::cout, std::cerr); }
