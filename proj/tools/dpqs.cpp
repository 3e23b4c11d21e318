#include <iostream>

#include "dpqs/cli.hpp"

int main(int argc, char** argv) { return dpqs::cli_dispatch(argc, argv, std::cin, std::cout, std::cerr); }
