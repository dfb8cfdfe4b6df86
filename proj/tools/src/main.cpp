#include <iostream>

#include "abelcycle/cli.hpp"

int main(int argc, char** argv) { return abelcycle::cli::run(argc, argv, std::cout, std::cerr); }
