#include <iostream>

#include "ftq/cli.hpp"

int main(int argc, char** argv) { return ftq::cli::run(argc, argv, std::cout, std::cerr); }
