#include "plabic/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return plabic::cli::run(argc, argv, std::cout, std::cerr); }
