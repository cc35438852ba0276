#include <iostream>

#include "orderdim/cli.hpp"

int main(int argc, char** argv) { return orderdim::cli::run(argc, argv, std::cout, std::cerr); }
