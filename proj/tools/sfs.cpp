#include <iostream>

#include "sfs/cli.hpp"

int main(int argc, char** argv) { return sfs::cli::run(argc, argv, std::cout, std::cerr); }
