#include <iostream>

#include "outfn/commands.hpp"

int main(int argc, char** argv) { return outfn::cli::run(argc, argv, std::cout, std::cerr); }
