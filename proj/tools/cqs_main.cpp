#include <iostream>

#include "cqs/cli.hpp"

int main(int argc, char** argv) { return cqs::cli::run(argc, argv, std::cout, std::cerr); }
