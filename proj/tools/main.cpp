#include <iostream>

#include "tverberg/cli.hpp"

int main(int argc, char** argv) { return tverberg::cli::run(argc, argv, std::cout, std::cerr); }
