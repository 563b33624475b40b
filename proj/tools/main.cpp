#include <iostream>

#include "racg_cli/commands.hpp"

int main(int argc, char** argv) { return racg::cli::run(argc, argv, std::cout, std::cerr); }
