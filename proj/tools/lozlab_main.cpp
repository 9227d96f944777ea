#include <iostream>

#include "lozlab/harness/cli.hpp"

int main(int argc, char** argv) { return lozlab::cli_main(argc, argv, std::cout, std::cerr); }
