#include <iostream>

#include "skewres_cli/cli.hpp"

int main(int argc, char** argv) { return skewres::cli::run(argc, argv, std::cout, std::cerr); }
