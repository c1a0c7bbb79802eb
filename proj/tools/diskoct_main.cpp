#include <iostream>

#include "diskoct/cli.hpp"

int main(int argc, char** argv) { return diskoct::cli_dispatch(argc, argv, std::cout, std::cerr); }
