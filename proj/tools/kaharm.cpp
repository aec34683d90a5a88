#include <iostream>

#include "kaharm/cli.hpp"

int main(int argc, char** argv) { return kaharm::cli::run(argc, argv, std::cout, std::cerr); }
