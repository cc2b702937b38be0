#include <iostream>

#include "risim/cli.hpp"

int main(int argc, char** argv) { return risim::cli_main(argc, argv, std::cout, std::cerr); }
