#include <iostream>

#include "saext/cli.hpp"

int main(int argc, char** argv) { return saext::cli_main(argc, argv, std::cout, std::cerr); }
